#pragma once

#include <span>
#include <vector>

#include "projkernel/kernels.hpp"

namespace projkernel::detail {

// forward:  X_k = sum_j x_j exp(-2 pi i j k / N)
// backward: x_j = sum_k X_k exp(+2 pi i j k / N)   (unnormalized)
enum class DftDirection { forward, backward };

std::vector<Complex> dft(std::span<const Complex> in, DftDirection direction);

} // namespace projkernel::detail
