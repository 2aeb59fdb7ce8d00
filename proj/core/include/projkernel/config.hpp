#pragma once

#include <filesystem>
#include <optional>
#include <string_view>

#include "projkernel/quadrature.hpp"

namespace projkernel {

inline constexpr std::string_view kConfigEnvVar = "PROJKERNEL_CONFIG";

/// Reads a JSON object with any of the keys "L", "step", "eps", "rule"
/// ("trapezoid" | "simpson") over `base`. Throws std::runtime_error on
/// unreadable files or malformed values.
QuadratureConfig load_config_file(const std::filesystem::path& path,
                                  const QuadratureConfig& base = {});

/// Built-in defaults, overlaid with the file named by PROJKERNEL_CONFIG if set.
QuadratureConfig default_config();

std::optional<Rule> parse_rule(std::string_view name) noexcept;
std::string_view to_string(Rule rule) noexcept;
std::string_view to_string(Domain domain) noexcept;

} // namespace projkernel
