#pragma once

#include <optional>
#include <string_view>

#include "projkernel/quadrature.hpp"
#include "projkernel/report.hpp"

namespace projkernel {

/// quick: reduced truncation widths and sample counts, a few seconds.
/// desk: every check at the reference configuration.
enum class SuiteLevel { quick, desk };

std::optional<SuiteLevel> parse_suite_level(std::string_view name) noexcept;

/// Runs the identity checks for every kernel family and collects them into a report.
IdentityReport run_identity_suite(SuiteLevel level, const QuadratureConfig& cfg = {});

} // namespace projkernel
