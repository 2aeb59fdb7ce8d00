#pragma once

#include <complex>

namespace projkernel {

using Complex = std::complex<double>;

/// Momentum cutoff a of the band projector P(a) = int_{-a}^{a} |p><p| dp (hbar = 1).
class BandParams {
public:
    /// Throws std::invalid_argument unless a is finite and strictly positive.
    explicit BandParams(double a);

    double a() const noexcept { return a_; }

private:
    double a_;
};

enum class Side { plus, minus };

enum class KernelLabel { plus, minus, difference, combined };

/**
 * A translation-invariant generalized kernel
 *
 *     k(dx) = delta_coeff * delta(dx) + pole / dx,
 *
 * where the regular part pole/dx is only meaningful under principal-value
 * integration. Every half-line kernel in this library has this shape, so
 * the regular part is stored as the single complex residue `pole`.
 */
class SplitKernel {
public:
    constexpr SplitKernel(Complex delta_coeff, Complex pole, KernelLabel label) noexcept
        : delta_coeff_(delta_coeff), pole_(pole), label_(label) {}

    constexpr Complex delta_coeff() const noexcept { return delta_coeff_; }
    constexpr Complex pole() const noexcept { return pole_; }
    constexpr KernelLabel label() const noexcept { return label_; }

    /// Regular part at dx != 0. Throws std::domain_error at dx == 0.
    Complex regular(double dx) const;

    friend SplitKernel operator+(const SplitKernel& lhs, const SplitKernel& rhs) noexcept;
    friend SplitKernel operator-(const SplitKernel& lhs, const SplitKernel& rhs) noexcept;

private:
    Complex delta_coeff_;
    Complex pole_;
    KernelLabel label_;
};

/// sin(a dx) / (pi dx), with the continuous value a/pi at dx = 0.
double sinc_kernel(double dx, const BandParams& band);

/// Kernel <x|P_pm|x'> of the projector onto the positive (plus) or negative
/// (minus) momentum half-line, as a function of dx = x - x'.
SplitKernel halfline_kernel(Side side);

/// Kernel <p|P^pm|p'> of the projector onto the positive or negative
/// coordinate half-line, as a function of dp = p - p'. The regular part has
/// the opposite sign to halfline_kernel.
SplitKernel momentum_halfline_kernel(Side side);

/// <p|(P^+ - P^-)|p'> = 1/(pi i dp); no delta part.
SplitKernel difference_kernel();

/// The pure delta kernel (identity projector).
SplitKernel identity_kernel();

enum class MaskTag { delta, zero };

/// <p|P(a)|p'>: delta(p - p') when both momenta lie in the band, otherwise zero.
MaskTag band_mask_kernel(double p, double p2, const BandParams& band);

/// <p|P_+|p'>: delta(p - p') when both momenta are non-negative, otherwise zero.
MaskTag halfline_mask_kernel(double p, double p2);

} // namespace projkernel
