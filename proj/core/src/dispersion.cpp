#include "projkernel/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fourier.hpp"
#include "pv_rule.hpp"

namespace projkernel {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

std::string format_complex(Complex z)
{
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
    return buf;
}

} // namespace

SampledSignal hilbert_pv(const SampledSignal& f, const QuadratureConfig& cfg)
{
    // (1/pi) int f(p') / (p - p') dp' = -(1/pi) C[f](p)
    return Complex{-1.0 / kPi, 0.0} * cauchy_transform(f, cfg);
}

SampledSignal hilbert_spectral(const SampledSignal& f)
{
    const std::size_t n = f.size();
    std::vector<Complex> spectrum = detail::dft(f.values(), detail::DftDirection::forward);
    // Bins 1 .. (n-1)/2 carry positive frequencies, the upper half negative
    // ones. The boundary bins (zero, and Nyquist for even n) sit on the
    // split between the half-lines and get mask value 0.
    const std::size_t positive_end = (n - 1) / 2;
    for (std::size_t k = 0; k < n; ++k) {
        if (k == 0 || (n % 2 == 0 && k == n / 2)) {
            spectrum[k] = 0.0;
        } else if (k <= positive_end) {
            spectrum[k] *= -kI;
        } else {
            spectrum[k] *= kI;
        }
    }
    std::vector<Complex> out = detail::dft(spectrum, detail::DftDirection::backward);
    const double scale = 1.0 / static_cast<double>(n);
    for (Complex& v : out) {
        v *= scale;
    }
    return {f.grid(), std::move(out), f.domain()};
}

HilbertPair hilbert_pair(const SampledSignal& f, HilbertMethod method,
                         const QuadratureConfig& cfg)
{
    SampledSignal transform =
        method == HilbertMethod::pv_convolution ? hilbert_pv(f, cfg) : hilbert_spectral(f);
    return {f, std::move(transform), method};
}

SampledSignal analytic_projection(const SampledSignal& f, const QuadratureConfig& cfg,
                                  Side side)
{
    return convolve_split_kernel(halfline_kernel(side), f, cfg);
}

double dispersion_residual(const SampledSignal& g, Side side, const QuadratureConfig& cfg)
{
    const IndexRange range = central_third(g.grid());
    const SampledSignal cauchy = cauchy_transform(g, cfg, range);
    // P_+ subspace: g = (1/(pi i)) C[g]; P_- subspace: g = -(1/(pi i)) C[g]
    const Complex factor = (side == Side::plus ? 1.0 : -1.0) / (kPi * kI);
    double worst = 0.0;
    for (std::size_t i = range.begin; i < range.end; ++i) {
        worst = std::max(worst, std::abs(g[i] - factor * cauchy[i]));
    }
    return worst;
}

SampledSignal time_to_frequency(const SampledSignal& u, const UniformGrid& omega_grid,
                                Rule rule)
{
    const std::size_t n = u.size();
    const double h = u.grid().step();

    std::size_t first = n;
    std::size_t last = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (u[j] != Complex{}) {
            first = std::min(first, j);
            last = j;
        }
    }

    std::vector<Complex> weighted(n);
    for (std::size_t j = 0; j < n; ++j) {
        weighted[j] = detail::rule_weight(j, n, rule) * h * u[j];
    }

    const double norm = 1.0 / std::sqrt(2.0 * kPi);
    std::vector<Complex> out(omega_grid.count());
    if (first == n) {
        return {omega_grid, std::move(out), Domain::frequency};
    }
    for (std::size_t k = 0; k < out.size(); ++k) {
        const double omega = omega_grid.point(k);
        const Complex step = std::polar(1.0, -omega * h);
        Complex phase = std::polar(1.0, -omega * u.grid().point(first));
        Complex acc{};
        for (std::size_t j = first; j <= last; ++j) {
            acc += weighted[j] * phase;
            phase *= step;
        }
        out[k] = norm * acc;
    }
    return {omega_grid, std::move(out), Domain::frequency};
}

IdentityEntry causal_spectrum_check(const SampledSignal& u, const QuadratureConfig& cfg,
                                    double tolerance)
{
    cfg.validate();
    const double h = u.grid().step();
    const double nyquist = kPi / h;
    const double window = std::min(cfg.half_width, 0.25 * nyquist);
    if (window < 4.0 * cfg.pv_exclusion) {
        throw std::invalid_argument("causal_spectrum_check: frequency window too narrow for the PV exclusion");
    }

    std::size_t noncausal = 0;
    for (std::size_t j = 0; j < u.size(); ++j) {
        if (u.grid().point(j) < -1e-9 * h && u[j] != Complex{}) {
            ++noncausal;
        }
    }

    const UniformGrid omega_grid = UniformGrid::centered(0.0, window, cfg.step);
    const SampledSignal spectrum = time_to_frequency(u, omega_grid, cfg.rule);
    const IndexRange range = central_third(omega_grid);
    const SampledSignal cauchy = cauchy_transform(spectrum, cfg, range);

    // F(w) = (-1/(i pi)) C[F](w) = (i/pi) C[F](w)
    const Complex factor = kI / kPi;
    double worst = 0.0;
    for (std::size_t i = range.begin; i < range.end; ++i) {
        worst = std::max(worst, std::abs(spectrum[i] - factor * cauchy[i]));
    }

    const std::size_t centre = omega_grid.nearest_index(0.0);
    IdentityEntry entry;
    entry.name = "causal_spectrum_dispersion";
    entry.equation = "Eq 3.20";
    entry.parameters = {{"omega_window", omega_grid.x_max()},
                        {"omega_step", cfg.step},
                        {"time_step", h},
                        {"noncausal_samples", static_cast<double>(noncausal)}};
    entry.lhs_summary = "F(0)=" + format_complex(spectrum[centre]);
    entry.rhs_summary = "(i/pi)C[F](0)=" + format_complex(factor * cauchy[centre]);
    entry.residual = worst;
    entry.tolerance = tolerance;
    if (noncausal > 0) {
        entry.flags.push_back("noncausal_input");
    }
    return entry;
}

namespace {

SampledSignal difference_spectrum(const SampledSignal& spectrum)
{
    // hilbert_spectral returns i (P^+ - P^-) F
    return -kI * hilbert_spectral(spectrum);
}

} // namespace

Complex sum_over_poles(const SampledSignal& spectrum, double p, const QuadratureConfig& cfg)
{
    cfg.validate();
    const UniformGrid& grid = spectrum.grid();
    if (!(p > grid.x_min() && p < grid.x_max())) {
        throw std::out_of_range("sum_over_poles: p must lie strictly inside the grid");
    }
    const SampledSignal diff = difference_spectrum(spectrum);
    const double h = grid.step();
    const std::size_t e = detail::exclusion_steps(cfg.pv_exclusion, h);
    const std::size_t window = detail::window_steps(cfg.half_width, h);
    const Complex factor = kI / kPi;

    const std::size_t node = grid.nearest_index(p);
    if (std::abs(grid.point(node) - p) <= 1e-9 * h) {
        return factor * detail::cauchy_at_node(diff.values(), node, e, window, cfg.rule);
    }

    // Off-node: subtract the singularity,
    // PV int D/(p'-p) = int (D(p') - D(p))/(p'-p) dp' + D(p) ln((b-p)/(p-a)).
    const auto below = static_cast<std::size_t>(std::floor((p - grid.x_min()) / h));
    const double frac = (p - grid.point(below)) / h;
    const Complex at_p = (1.0 - frac) * diff[below] + frac * diff[below + 1];

    const std::size_t lo = below >= window ? below - window : 0;
    const std::size_t hi = std::min(grid.count() - 1, below + 1 + window);
    const std::size_t count = hi - lo + 1;
    Complex acc{};
    for (std::size_t j = lo; j <= hi; ++j) {
        acc += detail::rule_weight(j - lo, count, cfg.rule) * (diff[j] - at_p) /
               (grid.point(j) - p);
    }
    acc *= h;
    acc += at_p * std::log((grid.point(hi) - p) / (p - grid.point(lo)));
    return factor * acc;
}

SampledSignal sum_over_poles(const SampledSignal& spectrum, const QuadratureConfig& cfg)
{
    const SampledSignal diff = difference_spectrum(spectrum);
    return (kI / kPi) * cauchy_transform(diff, cfg);
}

} // namespace projkernel
