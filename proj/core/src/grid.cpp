#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "projkernel/quadrature.hpp"

namespace projkernel {

UniformGrid::UniformGrid(double x_min, double step, std::size_t count)
    : x_min_(x_min), step_(step), count_(count)
{
    if (!std::isfinite(x_min) || !std::isfinite(step) || step <= 0.0) {
        throw std::invalid_argument("grid step must be finite and positive");
    }
    if (count < 2) {
        throw std::invalid_argument("grid needs at least two points");
    }
}

UniformGrid UniformGrid::centered(double center, double half_width, double step)
{
    if (!(step > 0.0) || !(half_width > 0.0)) {
        throw std::invalid_argument("centered grid needs positive half width and step");
    }
    const auto half = static_cast<std::size_t>(std::llround(half_width / step));
    const std::size_t n = std::max<std::size_t>(half, 1);
    return {center - static_cast<double>(n) * step, step, 2 * n + 1};
}

std::size_t UniformGrid::nearest_index(double x) const noexcept
{
    const double t = std::round((x - x_min_) / step_);
    if (!(t > 0.0)) {
        return 0;
    }
    return std::min(static_cast<std::size_t>(t), count_ - 1);
}

bool UniformGrid::contains(double x) const noexcept
{
    const double tol = 1e-9 * step_;
    return x >= x_min_ - tol && x <= x_max() + tol;
}

IndexRange central_third(const UniformGrid& grid) noexcept
{
    const std::size_t n = grid.count();
    return {n / 3, n - n / 3};
}

SampledSignal::SampledSignal(UniformGrid grid, std::vector<Complex> values, Domain domain)
    : grid_(grid), values_(std::move(values)), domain_(domain)
{
    if (values_.size() != grid_.count()) {
        throw std::invalid_argument("signal length does not match grid");
    }
    for (const Complex& v : values_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw std::invalid_argument("signal samples must be finite");
        }
    }
}

SampledSignal SampledSignal::from_function(const UniformGrid& grid,
                                           const std::function<Complex(double)>& fn,
                                           Domain domain)
{
    std::vector<Complex> values(grid.count());
    for (std::size_t i = 0; i < values.size(); ++i) {
        values[i] = fn(grid.point(i));
    }
    return {grid, std::move(values), domain};
}

SampledSignal SampledSignal::zeros(const UniformGrid& grid, Domain domain)
{
    return {grid, std::vector<Complex>(grid.count()), domain};
}

namespace {

void require_same_grid(const SampledSignal& lhs, const SampledSignal& rhs)
{
    if (!(lhs.grid() == rhs.grid())) {
        throw std::invalid_argument("signals live on different grids");
    }
}

template <typename Op>
SampledSignal combine(const SampledSignal& lhs, const SampledSignal& rhs, Op op)
{
    require_same_grid(lhs, rhs);
    std::vector<Complex> out(lhs.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = op(lhs[i], rhs[i]);
    }
    return {lhs.grid(), std::move(out), lhs.domain()};
}

} // namespace

SampledSignal operator+(const SampledSignal& lhs, const SampledSignal& rhs)
{
    return combine(lhs, rhs, std::plus<>{});
}

SampledSignal operator-(const SampledSignal& lhs, const SampledSignal& rhs)
{
    return combine(lhs, rhs, std::minus<>{});
}

SampledSignal operator*(Complex scale, const SampledSignal& f)
{
    std::vector<Complex> out(f.values().begin(), f.values().end());
    for (Complex& v : out) {
        v *= scale;
    }
    return {f.grid(), std::move(out), f.domain()};
}

double sup_distance(const SampledSignal& a, const SampledSignal& b, IndexRange range)
{
    require_same_grid(a, b);
    double worst = 0.0;
    for (std::size_t i = range.begin; i < std::min(range.end, a.size()); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

double sup_norm(const SampledSignal& a, IndexRange range)
{
    double worst = 0.0;
    for (std::size_t i = range.begin; i < std::min(range.end, a.size()); ++i) {
        worst = std::max(worst, std::abs(a[i]));
    }
    return worst;
}

} // namespace projkernel
