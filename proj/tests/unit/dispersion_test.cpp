#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "projkernel/dispersion.hpp"

using namespace projkernel;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

QuadratureConfig config(double half_width, double step, double eps)
{
    QuadratureConfig cfg;
    cfg.half_width = half_width;
    cfg.step = step;
    cfg.pv_exclusion = eps;
    return cfg;
}

SampledSignal windowed_wave(const UniformGrid& grid, double b, double sigma)
{
    return SampledSignal::from_function(grid, [=](double x) {
        return std::exp(kI * b * x - x * x / (2.0 * sigma * sigma));
    });
}

// Sum of a few shifted, modulated Gaussians with random complex weights.
SampledSignal random_smooth(const UniformGrid& grid, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> centre(-5.0, 5.0);
    std::uniform_real_distribution<double> width(0.7, 2.5);
    std::uniform_real_distribution<double> freq(-2.0, 2.0);
    std::normal_distribution<double> normal;
    struct Bump { double c, w, k; Complex amp; };
    std::vector<Bump> bumps(4);
    for (Bump& b : bumps) {
        b = {centre(rng), width(rng), freq(rng), {normal(rng), normal(rng)}};
    }
    return SampledSignal::from_function(grid, [bumps](double x) {
        Complex acc{};
        for (const Bump& b : bumps) {
            const double d = (x - b.c) / b.w;
            acc += b.amp * std::exp(kI * b.k * x - 0.5 * d * d);
        }
        return acc;
    });
}

SampledSignal zero_mean(SampledSignal f)
{
    Complex mean{};
    for (const Complex v : f.values()) {
        mean += v;
    }
    mean /= static_cast<double>(f.size());
    std::vector<Complex> out(f.values().begin(), f.values().end());
    for (Complex& v : out) {
        v -= mean;
    }
    return {f.grid(), std::move(out), f.domain()};
}

} // namespace

TEST(HilbertPv, LorentzianClosedForm)
{
    // H[1/(1+p^2)] = p/(1+p^2) for H f = (1/pi) PV int f(p') / (p - p') dp'
    const QuadratureConfig cfg;
    const UniformGrid grid = UniformGrid::centered(0.0, 400.0, cfg.step);
    const SampledSignal f = SampledSignal::from_function(
        grid, [](double p) { return Complex{1.0 / (1.0 + p * p), 0.0}; }, Domain::momentum);
    const SampledSignal expected = SampledSignal::from_function(
        grid, [](double p) { return Complex{p / (1.0 + p * p), 0.0}; }, Domain::momentum);
    EXPECT_LE(sup_distance(hilbert_pv(f, cfg), expected, central_third(grid)), 1e-2);
    EXPECT_LE(sup_distance(hilbert_spectral(f), expected, central_third(grid)), 1e-2);
}

TEST(HilbertPv, GaussianMatchesDawsonOracle)
{
    const QuadratureConfig cfg = config(400.0, 0.05, 0.05);
    const UniformGrid grid = UniformGrid::centered(0.0, 30.0, cfg.step);
    const SampledSignal f = SampledSignal::from_function(grid, [](double p) { return Complex{std::exp(-p * p), 0.0}; });
    const SampledSignal h = hilbert_pv(f, cfg);
    for (const double p : {-2.0, 0.3, 1.0, 4.0}) {
        EXPECT_NEAR(h[grid.nearest_index(p)].real(), -oracle::gaussian_cauchy(p) / kPi, 1e-4);
    }
}

TEST(HilbertPv, WindowedCosineBecomesSine)
{
    const QuadratureConfig cfg;
    const UniformGrid grid = UniformGrid::centered(0.0, 100.0, cfg.step);
    const auto window = [](double p) { return std::exp(-p * p / 200.0); };
    const SampledSignal f = SampledSignal::from_function(grid, [&](double p) { return Complex{std::cos(p) * window(p), 0.0}; });
    const SampledSignal expected = SampledSignal::from_function(grid, [&](double p) { return Complex{std::sin(p) * window(p), 0.0}; });
    const SampledSignal pv = hilbert_pv(f, cfg);
    const SampledSignal spectral = hilbert_spectral(f);
    EXPECT_LE(sup_distance(pv, spectral, central_third(grid)), 1e-2);
    EXPECT_LE(sup_distance(spectral, expected, central_third(grid)), 1e-10);
}

TEST(HilbertPv, ZeroMapsToZero)
{
    const UniformGrid grid = UniformGrid::centered(0.0, 10.0, 0.05);
    const SampledSignal zero = SampledSignal::zeros(grid, Domain::momentum);
    EXPECT_EQ(sup_norm(hilbert_pv(zero, config(10.0, 0.05, 0.05)), {0, grid.count()}), 0.0);
    EXPECT_EQ(sup_norm(hilbert_spectral(zero), {0, grid.count()}), 0.0);
}

TEST(HilbertSpectral, PeriodicExponentialsArePhaseShifted)
{
    const UniformGrid grid(0.0, 0.05, 1000);
    const double period = 0.05 * 1000;
    for (const int m : {-37, -3, 1, 5, 120}) {
        const double b = 2.0 * kPi * m / period;
        const SampledSignal f = SampledSignal::from_function(grid, [b](double p) { return std::exp(kI * b * p); });
        const Complex factor = m > 0 ? -kI : kI;
        EXPECT_LE(sup_distance(hilbert_spectral(f), factor * f, {0, grid.count()}), 1e-10) << m;
        // direct half-domain sum: the sign mask applied to the single active bin
        const SampledSignal masked = oracle::momentum_mask(f, [](double p) {
            return p > 0.0 ? 1.0 : (p < 0.0 ? -1.0 : 0.0);
        });
        EXPECT_LE(sup_distance(hilbert_spectral(f), -kI * masked, {0, grid.count()}), 1e-9) << m;
    }
}

TEST(HilbertSpectral, ConstantAndNyquistAreAnnihilated)
{
    const UniformGrid grid(0.0, 0.1, 64);
    const SampledSignal one = SampledSignal::from_function(grid, [](double) { return Complex{1.0, 0.0}; });
    EXPECT_LE(sup_norm(hilbert_spectral(one), {0, 64}), 1e-14);
    const SampledSignal alternating = SampledSignal::from_function(grid, [&](double p) {
        return Complex{std::cos(kPi * std::round(p / 0.1)), 0.0};
    });
    EXPECT_LE(sup_norm(hilbert_spectral(alternating), {0, 64}), 1e-14);
}

TEST(HilbertSpectral, DoubleApplicationIsMinusIdentityOnZeroMean)
{
    std::mt19937_64 rng(31);
    for (const std::size_t n : {257u, 1024u, 3001u}) {
        const UniformGrid grid = UniformGrid(-20.0, 40.0 / static_cast<double>(n), n);
        SampledSignal f = zero_mean(random_smooth(grid, rng));
        if (n % 2 == 0) {
            // remove the Nyquist component too, it has no partner under the mask
            f = oracle::momentum_mask(f, [&](double p) {
                return std::abs(std::abs(p) - kPi / grid.step()) < 1e-9 ? 0.0 : 1.0;
            });
        }
        const SampledSignal twice = hilbert_spectral(hilbert_spectral(f));
        EXPECT_LE(sup_distance(twice, Complex{-1.0, 0.0} * f, {0, n}), 1e-10) << n;
    }
}

TEST(HilbertSpectral, RealInputGivesRealOutput)
{
    const UniformGrid grid = UniformGrid::centered(0.0, 20.0, 0.05);
    const SampledSignal f = SampledSignal::from_function(grid, [](double p) { return Complex{p * std::exp(-p * p), 0.0}; });
    const SampledSignal h = hilbert_spectral(f);
    for (const Complex v : h.values()) {
        EXPECT_NEAR(v.imag(), 0.0, 1e-14);
    }
}

TEST(HilbertPair, CarriesMethodAndGrid)
{
    const UniformGrid grid = UniformGrid::centered(0.0, 10.0, 0.05);
    const SampledSignal f = windowed_wave(grid, 1.0, 2.0);
    const HilbertPair pair = hilbert_pair(f, HilbertMethod::spectral_sign, config(10.0, 0.05, 0.05));
    EXPECT_EQ(pair.method, HilbertMethod::spectral_sign);
    EXPECT_EQ(pair.transform.grid(), pair.original.grid());
}

TEST(AnalyticProjection, PositiveWaveIsKept)
{
    const QuadratureConfig cfg;
    const UniformGrid grid = UniformGrid::centered(0.0, 100.0, cfg.step);
    const SampledSignal f = windowed_wave(grid, 1.0, 10.0);
    EXPECT_LE(sup_distance(analytic_projection(f, cfg), f, central_third(grid)), 1e-2);
}

TEST(AnalyticProjection, CosineSplitsEvenly)
{
    const QuadratureConfig cfg;
    const UniformGrid grid = UniformGrid::centered(0.0, 100.0, cfg.step);
    const auto window = [](double x) { return std::exp(-x * x / 200.0); };
    const SampledSignal f = SampledSignal::from_function(grid, [&](double x) { return Complex{std::cos(x) * window(x), 0.0}; });
    const SampledSignal expected = oracle::momentum_mask(f, [](double p) { return p > 0.0 ? 1.0 : 0.0; });
    const SampledSignal g = analytic_projection(f, cfg);
    EXPECT_LE(sup_distance(g, expected, central_third(grid)), 1e-2);
    EXPECT_LE(sup_distance(g, Complex{0.5, 0.0} * windowed_wave(grid, 1.0, 10.0), central_third(grid)), 1e-2);
}

TEST(AnalyticProjection, ZeroMapsToZero)
{
    const UniformGrid grid = UniformGrid::centered(0.0, 10.0, 0.05);
    EXPECT_EQ(sup_norm(analytic_projection(SampledSignal::zeros(grid), config(10.0, 0.05, 0.05)), {0, grid.count()}), 0.0);
}

TEST(AnalyticProjection, PlusAndMinusSumToInput)
{
    const QuadratureConfig cfg;
    const UniformGrid grid = UniformGrid::centered(0.0, 50.0, cfg.step);
    std::mt19937_64 rng(37);
    const SampledSignal f = random_smooth(grid, rng);
    const SampledSignal sum = analytic_projection(f, cfg, Side::plus) + analytic_projection(f, cfg, Side::minus);
    EXPECT_LE(sup_distance(sum, f, {0, grid.count()}), 1e-12);
}

TEST(AnalyticProjection, OutputIsOneSided)
{
    const QuadratureConfig cfg;
    const UniformGrid grid = UniformGrid::centered(0.0, 100.0, cfg.step);
    std::mt19937_64 rng(41);
    const SampledSignal g = analytic_projection(random_smooth(grid, rng), cfg);
    const std::size_t lo = central_third(grid).begin;
    const std::size_t hi = central_third(grid).end;
    std::vector<Complex> middle(g.values().begin() + static_cast<long>(lo), g.values().begin() + static_cast<long>(hi));
    const SampledSignal cropped(UniformGrid(grid.point(lo), grid.step(), hi - lo), std::move(middle), g.domain());
    EXPECT_LE(oracle::negative_momentum_fraction(cropped), 1e-2);
}

TEST(DispersionResidual, ProjectedSignalsSatisfyRelation)
{
    const QuadratureConfig cfg;
    const UniformGrid grid = UniformGrid::centered(0.0, 100.0, cfg.step);
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 3; ++trial) {
        const SampledSignal f = random_smooth(grid, rng);
        EXPECT_LE(dispersion_residual(analytic_projection(f, cfg, Side::plus), Side::plus, cfg), 5e-2);
        EXPECT_LE(dispersion_residual(analytic_projection(f, cfg, Side::minus), Side::minus, cfg), 5e-2);
    }
}

TEST(DispersionResidual, SymmetricGaussianIsRejected)
{
    const QuadratureConfig cfg;
    const UniformGrid grid = UniformGrid::centered(0.0, 100.0, cfg.step);
    const SampledSignal g = SampledSignal::from_function(grid, [](double x) { return Complex{std::exp(-x * x), 0.0}; });
    EXPECT_GT(dispersion_residual(g, Side::plus, cfg), 0.3);
    EXPECT_GT(dispersion_residual(g, Side::minus, cfg), 0.3);
}

TEST(DispersionResidual, ZeroIsExact)
{
    const UniformGrid grid = UniformGrid::centered(0.0, 10.0, 0.05);
    EXPECT_EQ(dispersion_residual(SampledSignal::zeros(grid), Side::plus, config(10.0, 0.05, 0.05)), 0.0);
}

TEST(TimeToFrequency, OnePoleSpectrum)
{
    const UniformGrid time(0.0, 0.002, 20001);
    const SampledSignal u = SampledSignal::from_function(
        time, [](double t) { return Complex{t >= -1e-12 ? std::exp(-t) : 0.0, 0.0}; }, Domain::time);
    const UniformGrid omega = UniformGrid::centered(0.0, 20.0, 0.5);
    const SampledSignal F = time_to_frequency(u, omega);
    EXPECT_EQ(F.domain(), Domain::frequency);
    for (std::size_t k = 0; k < omega.count(); ++k) {
        const double w = omega.point(k);
        const Complex expected = 1.0 / (std::sqrt(2.0 * kPi) * Complex{1.0, w});
        EXPECT_NEAR(std::abs(F[k] - expected), 0.0, 1e-4) << "omega=" << w;
    }
}

TEST(CausalSpectrum, DecayingExponentialPasses)
{
    const UniformGrid time(-5.0, 0.002, 22501);
    const SampledSignal u = SampledSignal::from_function(
        time, [](double t) { return Complex{t >= -1e-12 ? std::exp(-t) : 0.0, 0.0}; }, Domain::time);
    const IdentityEntry e = causal_spectrum_check(u, QuadratureConfig{});
    EXPECT_LE(e.residual, 5e-2);
    EXPECT_TRUE(e.passed());
    EXPECT_TRUE(e.flags.empty());
    EXPECT_EQ(e.equation, "Eq 3.20");
}

TEST(CausalSpectrum, EvenSignalFailsAndIsFlagged)
{
    const UniformGrid time(-40.0, 0.002, 40001);
    const SampledSignal u = SampledSignal::from_function(
        time, [](double t) { return Complex{std::exp(-std::abs(t)), 0.0}; }, Domain::time);
    const IdentityEntry e = causal_spectrum_check(u, QuadratureConfig{});
    EXPECT_GE(e.residual, 0.3);
    EXPECT_FALSE(e.passed());
    ASSERT_EQ(e.flags.size(), 1u);
    EXPECT_EQ(e.flags.front(), "noncausal_input");
}

TEST(CausalSpectrum, ZeroSignal)
{
    const UniformGrid time(0.0, 0.01, 1000);
    const IdentityEntry e = causal_spectrum_check(SampledSignal::zeros(time, Domain::time), QuadratureConfig{});
    EXPECT_EQ(e.residual, 0.0);
}

TEST(SumOverPoles, ReproducesGaussianSpectrum)
{
    const QuadratureConfig cfg;
    const UniformGrid grid = UniformGrid::centered(0.0, 100.0, cfg.step);
    // transform of e^{-x^2} with the symmetric 1/sqrt(2 pi) normalization
    const auto exact = [](double p) { return std::exp(-p * p / 4.0) / std::sqrt(2.0); };
    const SampledSignal F = SampledSignal::from_function(grid, [&](double p) { return Complex{exact(p), 0.0}; }, Domain::momentum);
    EXPECT_NEAR(std::abs(sum_over_poles(F, 0.0, cfg) - exact(0.0)), 0.0, 5e-2);
    EXPECT_NEAR(std::abs(sum_over_poles(F, 0.013, cfg) - exact(0.013)), 0.0, 5e-2);
    EXPECT_NEAR(std::abs(sum_over_poles(F, -1.37, cfg) - exact(-1.37)), 0.0, 5e-2);
    EXPECT_LE(sup_distance(sum_over_poles(F, cfg), F, central_third(grid)), 5e-2);
}

TEST(SumOverPoles, ZeroAndDomain)
{
    const UniformGrid grid = UniformGrid::centered(0.0, 10.0, 0.05);
    const QuadratureConfig cfg = config(10.0, 0.05, 0.05);
    const SampledSignal zero = SampledSignal::zeros(grid, Domain::momentum);
    EXPECT_EQ(sum_over_poles(zero, 0.0, cfg), Complex{});
    EXPECT_THROW(sum_over_poles(zero, 10.0, cfg), std::out_of_range);
    EXPECT_THROW(sum_over_poles(zero, -11.0, cfg), std::out_of_range);
}
