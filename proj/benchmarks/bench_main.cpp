#include <benchmark/benchmark.h>

#include <cmath>

#include "projkernel/projkernel.hpp"

using namespace projkernel;

namespace {

SampledSignal gaussian(double half_width, double step)
{
    const UniformGrid grid = UniformGrid::centered(0.0, half_width, step);
    return SampledSignal::from_function(grid, [](double x) { return Complex{std::exp(-x * x), 0.0}; });
}

void BM_SincKernel(benchmark::State& state)
{
    const BandParams band(2.0);
    double dx = -10.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sinc_kernel(dx, band));
        dx += 1e-3;
        if (dx > 10.0) {
            dx = -10.0;
        }
    }
}
BENCHMARK(BM_SincKernel);

void BM_CauchyTransform(benchmark::State& state)
{
    QuadratureConfig cfg;
    cfg.half_width = static_cast<double>(state.range(0));
    const SampledSignal f = gaussian(cfg.half_width, cfg.step);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cauchy_transform(f, cfg));
    }
}
BENCHMARK(BM_CauchyTransform)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_BandlimitProject(benchmark::State& state)
{
    QuadratureConfig cfg;
    cfg.half_width = static_cast<double>(state.range(0));
    const SampledSignal f = gaussian(cfg.half_width, cfg.step);
    const BandParams band(2.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bandlimit_project(f, band, cfg));
    }
}
BENCHMARK(BM_BandlimitProject)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_IncompleteKronecker(benchmark::State& state)
{
    const int K = static_cast<int>(state.range(0));
    const DiscreteProjection P(K, K / 8 + 1, K / 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(incomplete_kronecker_sum(P));
    }
}
BENCHMARK(BM_IncompleteKronecker)->Arg(16)->Arg(64)->Arg(256);

void BM_HilbertSpectral(benchmark::State& state)
{
    const SampledSignal f = gaussian(static_cast<double>(state.range(0)), 0.05);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hilbert_spectral(f));
    }
}
BENCHMARK(BM_HilbertSpectral)->Arg(100)->Arg(400);

} // namespace
BENCHMARK_MAIN();
