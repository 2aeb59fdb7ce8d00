#pragma once

#include <vector>

#include <Eigen/Dense>

#include "projkernel/kernels.hpp"

// Finite-dimensional projections. Time and frequency indices are 1-based
// (t_n = n, omega_k = 2 pi k / K for 1 <= k, n <= K), matching the usual
// bra-ket notation; Eigen storage underneath is 0-based.

namespace projkernel {

using ComplexVectorK = Eigen::VectorXcd;

/// Projector onto a set of DFT frequencies, normally the contiguous band K1..K2.
class DiscreteProjection {
public:
    /// Contiguous band. Throws std::invalid_argument unless 1 <= K1 <= K2 <= K.
    DiscreteProjection(int dimension, int first, int last);

    /// Arbitrary (sorted, de-duplicated) frequency set; each index in [1, K].
    static DiscreteProjection from_indices(int dimension, std::vector<int> indices);

    int dimension() const noexcept { return dimension_; }
    int first() const noexcept { return indices_.front(); }
    int last() const noexcept { return indices_.back(); }
    int rank() const noexcept { return static_cast<int>(indices_.size()); }
    const std::vector<int>& indices() const noexcept { return indices_; }
    bool contiguous() const noexcept;

    /// True when the band is not a proper sub-band 1 <= K1 < K2 < K
    /// (rank-one bands and bands reaching K are admitted but flagged).
    bool degenerate() const noexcept;

    bool contains(int k) const noexcept;

private:
    DiscreteProjection(int dimension, std::vector<int> indices);

    int dimension_;
    std::vector<int> indices_;
};

/// Matrix of incomplete Kronecker deltas delta_kn(P) = <t_k|P|t_n>.
class IncompleteKroneckerMatrix {
public:
    explicit IncompleteKroneckerMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {}

    const Eigen::MatrixXcd& matrix() const noexcept { return m_; }
    int dimension() const noexcept { return static_cast<int>(m_.rows()); }

    /// 1-based entry delta_kn(P).
    Complex operator()(int k, int n) const { return m_(k - 1, n - 1); }

private:
    Eigen::MatrixXcd m_;
};

/// |omega_k>: component n is exp(i omega_k t_n) / sqrt(K).
ComplexVectorK dft_basis_vector(int dimension, int k);

/// Component k = (1/sqrt K) sum_n u(t_n) exp(+i omega_k t_n).
ComplexVectorK spectral_amplitude(const ComplexVectorK& u);

/// delta_kn(P) = (1/K) sum_{m in P} exp(i omega_m (t_k - t_n)), by direct summation.
IncompleteKroneckerMatrix incomplete_kronecker_sum(const DiscreteProjection& projection);

/// Geometric-sum closed form of delta_kn(P) for a contiguous band.
/// Throws std::invalid_argument for non-contiguous projections or bad indices.
Complex incomplete_kronecker_closed(const DiscreteProjection& projection, int k, int n);

/// P u as the matrix product M u.
ComplexVectorK project_signal(const ComplexVectorK& u, const DiscreteProjection& projection);

/// P u as sum_{m in P} |omega_m><omega_m|u>: mask the spectrum and transform back.
ComplexVectorK project_signal_spectral(const ComplexVectorK& u,
                                       const DiscreteProjection& projection);

struct SupportVerdict {
    bool supported = false;
    double residual = 0.0;
};

/// Relative residual ||P u - u|| / ||u||; the zero vector counts as supported.
SupportVerdict support_test(const ComplexVectorK& u, const DiscreteProjection& projection,
                            double tolerance);

} // namespace projkernel
