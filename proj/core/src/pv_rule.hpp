#pragma once

// Paired principal-value rule shared by the quadrature and dispersion modules.

#include <cstddef>
#include <span>

#include "projkernel/kernels.hpp"
#include "projkernel/quadrature.hpp"

namespace projkernel::detail {

/// Weight of sample j in a composite rule over n equally spaced samples with
/// unit step. Simpson with an odd interval count closes with the 3/8 rule
/// on the last three intervals.
double rule_weight(std::size_t j, std::size_t n, Rule rule) noexcept;

/// Exclusion half-width in grid steps; throws unless eps is a positive whole
/// multiple of step.
std::size_t exclusion_steps(double eps, double step);

/// Truncation half-width in grid steps (at least 1).
std::size_t window_steps(double half_width, double step) noexcept;

/**
 * PV int f(x') / (x' - x_i) dx' for samples f on a unit-free uniform grid.
 *
 * The result is independent of the grid step: with S(s) = (f(x_i+s) - f(x_i-s))/s
 * every term h S(jh) reduces to (f[i+j] - f[i-j]) / j. Nodes closer than
 * `excl` are skipped and the excluded window is replaced by the even
 * quadratic through S(eps) and S(2 eps). Where the window runs past one
 * end of the grid the surplus on the other side is integrated unpaired.
 */
Complex cauchy_at_node(std::span<const Complex> f, std::size_t i, std::size_t excl,
                       std::size_t window, Rule rule) noexcept;

} // namespace projkernel::detail
