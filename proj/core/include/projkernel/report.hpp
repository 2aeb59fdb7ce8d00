#pragma once

#include <string>
#include <utility>
#include <vector>

namespace projkernel {

/// One verified identity: what was compared, how far apart, and against what tolerance.
struct IdentityEntry {
    std::string name;
    std::string equation;
    std::vector<std::pair<std::string, double>> parameters;
    std::string lhs_summary;
    std::string rhs_summary;
    double residual = 0.0;
    double tolerance = 0.0;
    std::vector<std::string> flags;

    // NaN residuals fail.
    bool passed() const noexcept { return residual <= tolerance; }
};

struct IdentityReport {
    std::string tool_version;
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<IdentityEntry> entries;

    bool all_passed() const noexcept;
    std::size_t failure_count() const noexcept;

    /// Deterministic JSON rendering (no timestamps).
    std::string to_json(int indent = 2) const;
};

} // namespace projkernel
