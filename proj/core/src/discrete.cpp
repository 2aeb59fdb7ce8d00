#include "projkernel/discrete.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace projkernel {

namespace {

// exp(2 pi i r / K) for an integer phase index, reduced mod K first so
// large products k * n stay exact.
Complex unit_root(std::int64_t r, int dimension) noexcept
{
    const std::int64_t K = dimension;
    const std::int64_t reduced = ((r % K) + K) % K;
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(reduced) /
                               static_cast<double>(K));
}

void require_index(int k, int dimension, const char* what)
{
    if (k < 1 || k > dimension) {
        throw std::invalid_argument(what);
    }
}

} // namespace

DiscreteProjection::DiscreteProjection(int dimension, int first, int last)
    : dimension_(dimension)
{
    if (dimension < 1 || first < 1 || first > last || last > dimension) {
        throw std::invalid_argument("discrete band requires 1 <= K1 <= K2 <= K");
    }
    indices_.reserve(static_cast<std::size_t>(last - first + 1));
    for (int k = first; k <= last; ++k) {
        indices_.push_back(k);
    }
}

DiscreteProjection::DiscreteProjection(int dimension, std::vector<int> indices)
    : dimension_(dimension), indices_(std::move(indices))
{
}

DiscreteProjection DiscreteProjection::from_indices(int dimension, std::vector<int> indices)
{
    if (dimension < 1 || indices.empty()) {
        throw std::invalid_argument("frequency set must be non-empty with K >= 1");
    }
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    if (indices.front() < 1 || indices.back() > dimension) {
        throw std::invalid_argument("frequency indices must lie in [1, K]");
    }
    return {dimension, std::move(indices)};
}

bool DiscreteProjection::contiguous() const noexcept
{
    return last() - first() + 1 == rank();
}

bool DiscreteProjection::degenerate() const noexcept
{
    return !(contiguous() && first() < last() && last() < dimension_);
}

bool DiscreteProjection::contains(int k) const noexcept
{
    return std::binary_search(indices_.begin(), indices_.end(), k);
}

ComplexVectorK dft_basis_vector(int dimension, int k)
{
    if (dimension < 1) {
        throw std::invalid_argument("dimension must be positive");
    }
    require_index(k, dimension, "dft_basis_vector: k must lie in [1, K]");
    const double scale = 1.0 / std::sqrt(static_cast<double>(dimension));
    ComplexVectorK v(dimension);
    for (int n = 1; n <= dimension; ++n) {
        v(n - 1) = scale * unit_root(static_cast<std::int64_t>(k) * n, dimension);
    }
    return v;
}

ComplexVectorK spectral_amplitude(const ComplexVectorK& u)
{
    const int K = static_cast<int>(u.size());
    ComplexVectorK out = ComplexVectorK::Zero(K);
    if (K == 0) {
        return out;
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(K));
    for (int k = 1; k <= K; ++k) {
        Complex acc{};
        for (int n = 1; n <= K; ++n) {
            acc += u(n - 1) * unit_root(static_cast<std::int64_t>(k) * n, K);
        }
        out(k - 1) = scale * acc;
    }
    return out;
}

IncompleteKroneckerMatrix incomplete_kronecker_sum(const DiscreteProjection& projection)
{
    const int K = projection.dimension();
    Eigen::MatrixXcd m(K, K);
    for (int k = 1; k <= K; ++k) {
        for (int n = 1; n <= K; ++n) {
            Complex acc{};
            for (const int freq : projection.indices()) {
                acc += unit_root(static_cast<std::int64_t>(freq) * (k - n), K);
            }
            m(k - 1, n - 1) = acc / static_cast<double>(K);
        }
    }
    return IncompleteKroneckerMatrix{std::move(m)};
}

Complex incomplete_kronecker_closed(const DiscreteProjection& projection, int k, int n)
{
    if (!projection.contiguous()) {
        throw std::invalid_argument("closed form needs a contiguous band");
    }
    const int K = projection.dimension();
    require_index(k, K, "incomplete_kronecker_closed: k must lie in [1, K]");
    require_index(n, K, "incomplete_kronecker_closed: n must lie in [1, K]");

    const std::int64_t d = k - n;
    const Complex ratio = unit_root(d, K);
    const Complex one{1.0, 0.0};
    if (std::abs(ratio - one) < 1e-9) {
        return Complex{static_cast<double>(projection.rank()) / K, 0.0};
    }
    const Complex upper = unit_root((projection.last() + 1) * d, K);
    const Complex lower = unit_root(projection.first() * d, K);
    return (upper - lower) / (ratio - one) / static_cast<double>(K);
}

ComplexVectorK project_signal(const ComplexVectorK& u, const DiscreteProjection& projection)
{
    if (u.size() != projection.dimension()) {
        throw std::invalid_argument("project_signal: dimension mismatch");
    }
    return incomplete_kronecker_sum(projection).matrix() * u;
}

ComplexVectorK project_signal_spectral(const ComplexVectorK& u,
                                       const DiscreteProjection& projection)
{
    const int K = projection.dimension();
    if (u.size() != K) {
        throw std::invalid_argument("project_signal_spectral: dimension mismatch");
    }
    ComplexVectorK out = ComplexVectorK::Zero(K);
    for (const int m : projection.indices()) {
        const ComplexVectorK basis = dft_basis_vector(K, m);
        out += basis.dot(u) * basis; // dot conjugates the left operand: <omega_m|u>
    }
    return out;
}

SupportVerdict support_test(const ComplexVectorK& u, const DiscreteProjection& projection,
                            double tolerance)
{
    if (!(tolerance > 0.0)) {
        throw std::invalid_argument("support_test: tolerance must be positive");
    }
    const double norm = u.norm();
    if (norm == 0.0) {
        return {true, 0.0};
    }
    const ComplexVectorK projected = project_signal(u, projection);
    const double residual =
        (projected - u).norm() / std::max(norm, std::numeric_limits<double>::min());
    return {residual <= tolerance, residual};
}

} // namespace projkernel
