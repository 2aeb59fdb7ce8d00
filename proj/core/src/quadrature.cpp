#include "projkernel/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

#include "pv_rule.hpp"

namespace projkernel {

namespace detail {

double rule_weight(std::size_t j, std::size_t n, Rule rule) noexcept
{
    if (n < 2 || j >= n) {
        return 0.0;
    }
    if (rule == Rule::trapezoid || n == 2) {
        return (j == 0 || j == n - 1) ? 0.5 : 1.0;
    }
    const std::size_t intervals = n - 1;
    if (intervals % 2 == 0) {
        if (j == 0 || j == intervals) {
            return 1.0 / 3.0;
        }
        return (j % 2 == 1) ? 4.0 / 3.0 : 2.0 / 3.0;
    }
    // odd interval count >= 3: Simpson on [0, s], 3/8 rule on [s, s + 3]
    const std::size_t s = intervals - 3;
    double w = 0.0;
    if (s > 0 && j <= s) {
        w += (j == 0 || j == s) ? 1.0 / 3.0 : ((j % 2 == 1) ? 4.0 / 3.0 : 2.0 / 3.0);
    }
    if (j >= s) {
        const std::size_t r = j - s;
        w += (r == 0 || r == 3) ? 3.0 / 8.0 : 9.0 / 8.0;
    }
    return w;
}

std::size_t exclusion_steps(double eps, double step)
{
    const double ratio = eps / step;
    const double rounded = std::round(ratio);
    if (!(rounded >= 1.0) || std::abs(ratio - rounded) > 1e-9 * std::max(1.0, ratio)) {
        throw std::invalid_argument("PV exclusion must be a positive whole multiple of the grid step");
    }
    return static_cast<std::size_t>(rounded);
}

std::size_t window_steps(double half_width, double step) noexcept
{
    const double ratio = half_width / step;
    const auto n = static_cast<std::size_t>(std::floor(ratio + 1e-9));
    return std::max<std::size_t>(n, 1);
}

namespace {

// sum_{j=lo}^{hi} w_j * term(j) with rule weights over the segment.
template <typename Term>
Complex segment_sum(std::size_t lo, std::size_t hi, Rule rule, Term term) noexcept
{
    if (hi <= lo) {
        return {};
    }
    const std::size_t n = hi - lo + 1;
    Complex acc{};
    if (rule == Rule::trapezoid) {
        for (std::size_t j = lo + 1; j < hi; ++j) {
            acc += term(j);
        }
        acc += 0.5 * (term(lo) + term(hi));
        return acc;
    }
    for (std::size_t j = lo; j <= hi; ++j) {
        acc += rule_weight(j - lo, n, rule) * term(j);
    }
    return acc;
}

} // namespace

Complex cauchy_at_node(std::span<const Complex> f, std::size_t i, std::size_t excl,
                       std::size_t window, Rule rule) noexcept
{
    const std::size_t n = f.size();
    const std::size_t right = std::min(window, n - 1 - i);
    const std::size_t left = std::min(window, i);
    const std::size_t paired = std::min(left, right);
    const std::size_t e = std::max<std::size_t>(excl, 1);

    Complex total{};
    if (paired >= 2 * e) {
        const Complex d1 = f[i + e] - f[i - e];
        const Complex d2 = f[i + 2 * e] - f[i - 2 * e];
        total += (11.0 / 9.0) * d1 - (1.0 / 9.0) * d2;
    } else if (paired >= e) {
        total += f[i + e] - f[i - e];
    }

    const std::size_t start = std::max(paired, e);
    if (paired > e) {
        total += segment_sum(e, paired, rule, [&](std::size_t j) {
            return (f[i + j] - f[i - j]) / static_cast<double>(j);
        });
    }
    if (right > start) {
        total += segment_sum(start, right, rule, [&](std::size_t j) {
            return f[i + j] / static_cast<double>(j);
        });
    }
    if (left > start) {
        total -= segment_sum(start, left, rule, [&](std::size_t j) {
            return f[i - j] / static_cast<double>(j);
        });
    }
    return total;
}

} // namespace detail

void QuadratureConfig::validate() const
{
    if (!std::isfinite(half_width) || half_width <= 0.0) {
        throw std::invalid_argument("truncation half width L must be positive");
    }
    if (!std::isfinite(step) || step <= 0.0) {
        throw std::invalid_argument("working grid step must be positive");
    }
    if (!std::isfinite(pv_exclusion) || pv_exclusion <= 0.0 || pv_exclusion >= half_width) {
        throw std::invalid_argument("PV exclusion must satisfy 0 < eps < L");
    }
    detail::exclusion_steps(pv_exclusion, step);
}

Complex integrate(const SampledSignal& f, Rule rule)
{
    const std::size_t n = f.size();
    const std::size_t minimum = rule == Rule::simpson ? 3 : 2;
    if (n < minimum) {
        throw std::invalid_argument("grid too short for the quadrature rule");
    }
    Complex acc{};
    for (std::size_t j = 0; j < n; ++j) {
        acc += detail::rule_weight(j, n, rule) * f[j];
    }
    return acc * f.grid().step();
}

Complex pv_integral(const std::function<Complex(double)>& f, double x0,
                    const QuadratureConfig& cfg)
{
    cfg.validate();
    if (!std::isfinite(x0)) {
        throw std::invalid_argument("pv_integral: singular point must be finite");
    }
    const double h = cfg.step;
    const std::size_t e = detail::exclusion_steps(cfg.pv_exclusion, h);
    const std::size_t last = detail::window_steps(cfg.half_width, h);
    if (last < 2 * e) {
        throw std::invalid_argument("pv_integral: window shorter than twice the exclusion");
    }

    auto pair_sum = [&](std::size_t j) {
        const double s = static_cast<double>(j) * h;
        return f(x0 + s) + f(x0 - s);
    };

    const double eps = static_cast<double>(e) * h;
    Complex total = eps * ((11.0 / 9.0) * pair_sum(e) - (2.0 / 9.0) * pair_sum(2 * e));
    const std::size_t n = last - e + 1;
    Complex outer{};
    for (std::size_t j = e; j <= last; ++j) {
        outer += detail::rule_weight(j - e, n, cfg.rule) * pair_sum(j);
    }
    total += h * outer;
    return total;
}

namespace {

std::size_t node_index(const UniformGrid& grid, double x0, std::size_t excl)
{
    const double lo = grid.x_min() + static_cast<double>(excl) * grid.step();
    const double hi = grid.x_max() - static_cast<double>(excl) * grid.step();
    const double tol = 1e-9 * grid.step();
    if (!(x0 > lo - tol && x0 < hi + tol) || 2 * excl >= grid.count()) {
        throw std::out_of_range("singular point lies outside the PV-capable part of the grid");
    }
    const std::size_t i = grid.nearest_index(x0);
    if (std::abs(grid.point(i) - x0) > tol) {
        throw std::invalid_argument("singular point must coincide with a grid node");
    }
    return i;
}

} // namespace

Complex cauchy_pv(const SampledSignal& f, double x0, const QuadratureConfig& cfg)
{
    cfg.validate();
    const double h = f.grid().step();
    const std::size_t e = detail::exclusion_steps(cfg.pv_exclusion, h);
    const std::size_t i = node_index(f.grid(), x0, e);
    return detail::cauchy_at_node(f.values(), i, e, detail::window_steps(cfg.half_width, h),
                                  cfg.rule);
}

SampledSignal cauchy_transform(const SampledSignal& f, const QuadratureConfig& cfg)
{
    return cauchy_transform(f, cfg, IndexRange{0, f.size()});
}

SampledSignal cauchy_transform(const SampledSignal& f, const QuadratureConfig& cfg,
                               IndexRange range)
{
    cfg.validate();
    const double h = f.grid().step();
    const std::size_t e = detail::exclusion_steps(cfg.pv_exclusion, h);
    const std::size_t window = detail::window_steps(cfg.half_width, h);
    std::vector<Complex> out(f.size());
    const std::size_t end = std::min(range.end, f.size());
    for (std::size_t i = range.begin; i < end; ++i) {
        out[i] = detail::cauchy_at_node(f.values(), i, e, window, cfg.rule);
    }
    return {f.grid(), std::move(out), f.domain()};
}

SampledSignal bandlimit_project(const SampledSignal& f, const BandParams& band,
                                const QuadratureConfig& cfg)
{
    cfg.validate();
    const std::size_t n = f.size();
    if (n == 0) {
        throw std::invalid_argument("bandlimit_project: empty signal");
    }
    const double h = f.grid().step();
    const std::size_t window = std::min(detail::window_steps(cfg.half_width, h), n - 1);

    // The kernel depends only on the index offset on a uniform grid.
    std::vector<double> table(window + 1);
    for (std::size_t d = 0; d <= window; ++d) {
        table[d] = h * sinc_kernel(static_cast<double>(d) * h, band);
    }

    const auto values = f.values();
    std::vector<Complex> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t lo = i >= window ? i - window : 0;
        const std::size_t hi = std::min(n - 1, i + window);
        const std::size_t count = hi - lo + 1;
        Complex acc{};
        if (cfg.rule == Rule::trapezoid) {
            for (std::size_t j = lo; j <= hi; ++j) {
                acc += table[i > j ? i - j : j - i] * values[j];
            }
            acc -= 0.5 * (table[i - lo] * values[lo] + table[hi - i] * values[hi]);
        } else {
            for (std::size_t j = lo; j <= hi; ++j) {
                acc += detail::rule_weight(j - lo, count, cfg.rule) *
                       table[i > j ? i - j : j - i] * values[j];
            }
        }
        out[i] = acc;
    }
    return {f.grid(), std::move(out), f.domain()};
}

SampledSignal convolve_split_kernel(const SplitKernel& k, const SampledSignal& f,
                                    const QuadratureConfig& cfg)
{
    cfg.validate();
    std::vector<Complex> out(f.values().begin(), f.values().end());
    for (Complex& v : out) {
        v *= k.delta_coeff();
    }
    if (k.pole() != Complex{}) {
        // int pole / (x - x') f(x') dx' = -pole * C[f](x)
        const SampledSignal cauchy = cauchy_transform(f, cfg);
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] -= k.pole() * cauchy[i];
        }
    }
    return {f.grid(), std::move(out), f.domain()};
}

SampledSignal double_pole_apply(const SampledSignal& f, const QuadratureConfig& cfg)
{
    // inner(x'') = int f(x') / (x'' - x') dx' = -C[f](x'')
    // outer(x)   = int inner(x'') / (x - x'') dx'' = C[C[f]](x)
    const SampledSignal once = cauchy_transform(f, cfg);
    const SampledSignal twice = cauchy_transform(once, cfg);
    return Complex{-1.0 / (std::numbers::pi * std::numbers::pi), 0.0} * twice;
}

namespace {

std::string format_real(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace

IdentityEntry reproduce_identity_check(const BandParams& band, double x, double x2,
                                       const QuadratureConfig& cfg, double tolerance)
{
    cfg.validate();
    const UniformGrid grid = UniformGrid::centered(0.5 * (x + x2), cfg.half_width, cfg.step);
    const SampledSignal integrand = SampledSignal::from_function(grid, [&](double y) {
        return Complex{sinc_kernel(x - y, band) * sinc_kernel(y - x2, band), 0.0};
    });
    const double rhs = integrate(integrand, cfg.rule).real();
    const double lhs = sinc_kernel(x - x2, band);

    IdentityEntry entry;
    entry.name = "reproducing_identity_sinc";
    entry.equation = "Eq 3.3";
    entry.parameters = {{"a", band.a()}, {"x", x}, {"x2", x2},
                        {"L", cfg.half_width}, {"step", cfg.step}};
    entry.lhs_summary = format_real(lhs);
    entry.rhs_summary = format_real(rhs);
    entry.residual = std::abs(lhs - rhs);
    entry.tolerance = tolerance;
    return entry;
}

} // namespace projkernel
