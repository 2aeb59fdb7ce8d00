#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "projkernel/kernels.hpp"
#include "projkernel/report.hpp"

namespace projkernel {

/// Uniform real grid x_i = x_min + i * step, 0 <= i < count.
class UniformGrid {
public:
    /// Throws std::invalid_argument unless step > 0 and count >= 2.
    UniformGrid(double x_min, double step, std::size_t count);

    /// Symmetric grid [center - half_width, center + half_width]; half_width
    /// is rounded to the nearest multiple of step.
    static UniformGrid centered(double center, double half_width, double step);

    double x_min() const noexcept { return x_min_; }
    double step() const noexcept { return step_; }
    std::size_t count() const noexcept { return count_; }
    double x_max() const noexcept { return point(count_ - 1); }
    double point(std::size_t i) const noexcept { return x_min_ + static_cast<double>(i) * step_; }

    /// Index of the node closest to x (clamped to the grid).
    std::size_t nearest_index(double x) const noexcept;

    bool contains(double x) const noexcept;

    friend bool operator==(const UniformGrid&, const UniformGrid&) = default;

private:
    double x_min_;
    double step_;
    std::size_t count_;
};

/// Half-open index range [begin, end).
struct IndexRange {
    std::size_t begin = 0;
    std::size_t end = 0;

    std::size_t size() const noexcept { return end - begin; }
};

/// Middle third of the grid, where truncation bias of the convolutions is smallest.
IndexRange central_third(const UniformGrid& grid) noexcept;

enum class Domain { coordinate, momentum, time, frequency };

/// Complex samples on a uniform grid: the numerical stand-in for f(x), <p|f>, u(t).
class SampledSignal {
public:
    /// Throws std::invalid_argument on length mismatch or non-finite samples.
    SampledSignal(UniformGrid grid, std::vector<Complex> values, Domain domain);

    static SampledSignal from_function(const UniformGrid& grid,
                                       const std::function<Complex(double)>& fn,
                                       Domain domain = Domain::coordinate);
    static SampledSignal zeros(const UniformGrid& grid, Domain domain = Domain::coordinate);

    const UniformGrid& grid() const noexcept { return grid_; }
    std::span<const Complex> values() const noexcept { return values_; }
    Domain domain() const noexcept { return domain_; }
    std::size_t size() const noexcept { return values_.size(); }
    Complex operator[](std::size_t i) const noexcept { return values_[i]; }

private:
    UniformGrid grid_;
    std::vector<Complex> values_;
    Domain domain_;
};

// Pointwise arithmetic; grids must match (std::invalid_argument otherwise).
SampledSignal operator+(const SampledSignal& lhs, const SampledSignal& rhs);
SampledSignal operator-(const SampledSignal& lhs, const SampledSignal& rhs);
SampledSignal operator*(Complex scale, const SampledSignal& f);

enum class Rule { trapezoid, simpson };

/**
 * Truncation and principal-value settings shared by every quadrature.
 *
 * Integrals over the real line are truncated to [x0 - half_width, x0 + half_width];
 * for 1/x kernels the neglected tails are O(1/half_width). The PV exclusion
 * window [x0 - pv_exclusion, x0 + pv_exclusion] must be a whole number of grid
 * steps so sample points pair symmetrically about the singularity.
 */
struct QuadratureConfig {
    double half_width = 400.0;
    double step = 0.05;
    double pv_exclusion = 0.05;
    Rule rule = Rule::trapezoid;

    /// Throws std::invalid_argument when the invariants above are violated.
    void validate() const;
};

/// Composite-rule integral over the full span of the signal's grid.
/// Throws std::invalid_argument when the grid is too short for the rule.
Complex integrate(const SampledSignal& f, Rule rule = Rule::trapezoid);

/**
 * PV int f(x) dx over [x0 - L, x0 + L], where f may carry a simple pole at x0.
 *
 * Samples are taken in pairs x0 +- s on the working grid of step cfg.step, so
 * the odd singular part cancels pair by pair. The excluded window
 * |x - x0| < eps is filled in from an even quadratic fit of the pair sums
 * f(x0 + s) + f(x0 - s) at s = eps, 2 eps.
 */
Complex pv_integral(const std::function<Complex(double)>& f, double x0,
                    const QuadratureConfig& cfg);

/// PV int f(x) / (x - x0) dx for sampled f. x0 must be a grid node inside
/// (x_min + eps, x_max - eps); throws std::out_of_range otherwise.
Complex cauchy_pv(const SampledSignal& f, double x0, const QuadratureConfig& cfg);

/// Cauchy transform C[f](x_i) = PV int f(x') / (x' - x_i) dx' at every grid node
/// (or only within `range`; nodes outside it are left at zero).
SampledSignal cauchy_transform(const SampledSignal& f, const QuadratureConfig& cfg);
SampledSignal cauchy_transform(const SampledSignal& f, const QuadratureConfig& cfg,
                               IndexRange range);

/// g(x_i) = sum_j w_j sinc(x_i - x_j; a) f(x_j): projection onto the band |p| <= a.
SampledSignal bandlimit_project(const SampledSignal& f, const BandParams& band,
                                const QuadratureConfig& cfg);

/// g(x) = k.delta_coeff f(x) + PV int k.regular(x - x') f(x') dx'.
SampledSignal convolve_split_kernel(const SplitKernel& k, const SampledSignal& f,
                                    const QuadratureConfig& cfg);

/// (-1/pi^2) int int f(x') / ((x - x'')(x'' - x')) dx' dx'', inner integral
/// over x' first. Reproduces f for f decaying inside the grid.
SampledSignal double_pole_apply(const SampledSignal& f, const QuadratureConfig& cfg);

/// Compares sinc(x - x2; a) with int sinc(x - x''; a) sinc(x'' - x2; a) dx''.
IdentityEntry reproduce_identity_check(const BandParams& band, double x, double x2,
                                       const QuadratureConfig& cfg, double tolerance = 1e-3);

/// max_i |a_i - b_i| over `range`. Grids must match.
double sup_distance(const SampledSignal& a, const SampledSignal& b, IndexRange range);

/// max_i |a_i| over `range`.
double sup_norm(const SampledSignal& a, IndexRange range);

} // namespace projkernel
