#include "fourier.hpp"

#include <mutex>

#include <fftw3.h>

namespace projkernel::detail {

namespace {

// The FFTW planner is not thread-safe; execution is.
std::mutex& planner_mutex()
{
    static std::mutex m;
    return m;
}

} // namespace

std::vector<Complex> dft(std::span<const Complex> in, DftDirection direction)
{
    const auto n = static_cast<int>(in.size());
    std::vector<Complex> input(in.begin(), in.end());
    std::vector<Complex> output(in.size());
    if (n == 0) {
        return output;
    }

    auto* src = reinterpret_cast<fftw_complex*>(input.data());
    auto* dst = reinterpret_cast<fftw_complex*>(output.data());
    const int sign = direction == DftDirection::forward ? FFTW_FORWARD : FFTW_BACKWARD;

    fftw_plan plan = nullptr;
    {
        std::lock_guard lock(planner_mutex());
        plan = fftw_plan_dft_1d(n, src, dst, sign, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
    return output;
}

} // namespace projkernel::detail
