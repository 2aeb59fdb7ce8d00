#pragma once

#include "projkernel/kernels.hpp"
#include "projkernel/quadrature.hpp"
#include "projkernel/report.hpp"

// Hilbert transform convention used throughout:
//
//     H[f](p) = (1/pi) PV int f(p') / (p - p') dp'
//
// so H[exp(i b p)] = -i sign(b) exp(i b p), H[cos] = sin and
// H[1/(1 + p^2)] = p / (1 + p^2). In terms of the coordinate half-line
// projectors, H[f] = i <p|(P^+ - P^-)|f>.

namespace projkernel {

enum class HilbertMethod { pv_convolution, spectral_sign };

struct HilbertPair {
    SampledSignal original;
    SampledSignal transform;
    HilbertMethod method;
};

/// H[f] by direct principal-value quadrature at every grid node.
SampledSignal hilbert_pv(const SampledSignal& f, const QuadratureConfig& cfg);

/// H[f] as i (P^+ - P^-) f: forward DFT, multiply by -i sign(frequency), inverse DFT.
/// The zero-frequency bin (and the Nyquist bin for even lengths) is mapped to zero.
SampledSignal hilbert_spectral(const SampledSignal& f);

HilbertPair hilbert_pair(const SampledSignal& f, HilbertMethod method,
                         const QuadratureConfig& cfg);

/// <x|P_pm|f>: convolution with the half-line kernel, i.e. (f +- i H[f]) / 2.
SampledSignal analytic_projection(const SampledSignal& f, const QuadratureConfig& cfg,
                                  Side side = Side::plus);

/// sup over the central third of |g(x) -+ (1/(pi i)) PV int g(x') / (x' - x) dx'|.
/// Small values support the hypothesis that g lies in the P_pm subspace.
double dispersion_residual(const SampledSignal& g, Side side, const QuadratureConfig& cfg);

/// Spectral amplitude F(omega) = (1/sqrt(2 pi)) int exp(-i omega t) u(t) dt on `omega_grid`.
SampledSignal time_to_frequency(const SampledSignal& u, const UniformGrid& omega_grid,
                                Rule rule = Rule::trapezoid);

/**
 * Checks that the spectral amplitude of a causal signal satisfies
 * F(omega) = (-1/(i pi)) PV int F(omega') / (omega' - omega) d omega'.
 *
 * The frequency window is [-W, W] with W = min(cfg.half_width, Nyquist / 4)
 * of the time grid and step cfg.step; the residual is the sup over its
 * central third. Samples at t < 0 are not rejected: they are counted and
 * reported in the entry's flags, and usually produce a large residual.
 */
IdentityEntry causal_spectrum_check(const SampledSignal& u, const QuadratureConfig& cfg,
                                    double tolerance = 5e-2);

/// (1/(pi i)) PV int D(p') / (p - p') dp' with D = (P^+ - P^-) F taken from
/// hilbert_spectral. Reproduces F(p). Throws std::out_of_range when p is
/// not strictly inside the grid.
Complex sum_over_poles(const SampledSignal& spectrum, double p, const QuadratureConfig& cfg);

/// sum_over_poles at every grid node.
SampledSignal sum_over_poles(const SampledSignal& spectrum, const QuadratureConfig& cfg);

} // namespace projkernel
