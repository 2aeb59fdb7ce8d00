#include "projkernel/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace projkernel {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

// Below this |a dx| the sin(t)/t series is used; 1 - t^2/6 is then exact to
// well under an ulp.
constexpr double kSeriesThreshold = 1e-4;

KernelLabel combined_label(const SplitKernel& lhs, const SplitKernel& rhs, bool subtract) noexcept
{
    const bool momentum_pair = (lhs.label() == KernelLabel::plus && rhs.label() == KernelLabel::minus);
    if (subtract && momentum_pair && lhs.pole() == -rhs.pole()) {
        return KernelLabel::difference;
    }
    return KernelLabel::combined;
}

} // namespace

BandParams::BandParams(double a) : a_(a)
{
    if (!std::isfinite(a) || a <= 0.0) {
        throw std::invalid_argument("band cutoff a must be finite and positive");
    }
}

Complex SplitKernel::regular(double dx) const
{
    if (dx == 0.0) {
        throw std::domain_error("regular part of a split kernel is undefined at dx = 0");
    }
    return pole_ / dx;
}

SplitKernel operator+(const SplitKernel& lhs, const SplitKernel& rhs) noexcept
{
    return {lhs.delta_coeff_ + rhs.delta_coeff_, lhs.pole_ + rhs.pole_,
            combined_label(lhs, rhs, false)};
}

SplitKernel operator-(const SplitKernel& lhs, const SplitKernel& rhs) noexcept
{
    return {lhs.delta_coeff_ - rhs.delta_coeff_, lhs.pole_ - rhs.pole_,
            combined_label(lhs, rhs, true)};
}

double sinc_kernel(double dx, const BandParams& band)
{
    if (!std::isfinite(dx)) {
        throw std::invalid_argument("sinc_kernel: displacement must be finite");
    }
    const double a = band.a();
    const double t = a * dx;
    if (std::abs(t) < kSeriesThreshold) {
        return a / kPi * (1.0 - t * t / 6.0);
    }
    return std::sin(t) / (kPi * dx);
}

SplitKernel halfline_kernel(Side side)
{
    // -1/(2 pi i dx) = +i/(2 pi dx)
    const Complex pole = kI / (2.0 * kPi);
    return side == Side::plus ? SplitKernel{0.5, pole, KernelLabel::plus}
                              : SplitKernel{0.5, -pole, KernelLabel::minus};
}

SplitKernel momentum_halfline_kernel(Side side)
{
    // +1/(2 pi i dp) = -i/(2 pi dp)
    const Complex pole = -kI / (2.0 * kPi);
    return side == Side::plus ? SplitKernel{0.5, pole, KernelLabel::plus}
                              : SplitKernel{0.5, -pole, KernelLabel::minus};
}

SplitKernel difference_kernel()
{
    return {0.0, -kI / kPi, KernelLabel::difference};
}

SplitKernel identity_kernel()
{
    return {1.0, 0.0, KernelLabel::combined};
}

MaskTag band_mask_kernel(double p, double p2, const BandParams& band)
{
    const double a = band.a();
    return (std::abs(p) <= a && std::abs(p2) <= a) ? MaskTag::delta : MaskTag::zero;
}

MaskTag halfline_mask_kernel(double p, double p2)
{
    return (p >= 0.0 && p2 >= 0.0) ? MaskTag::delta : MaskTag::zero;
}

} // namespace projkernel
