#pragma once

#include <cstddef>
#include <cstdint>

#include "cssx/matrix.hpp"

namespace cssx {

/// Standard normal entries in row-major fill order, Box-Muller over the
/// documented uniform stream (reproducible across platforms).
DenseMatrix gaussian_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed);

/// G1 G2^T / sqrt(rank) + noise * G3 with independent standard normal
/// factors; `noise` controls the trailing singular values.
DenseMatrix low_rank_plus_noise(std::size_t rows, std::size_t cols, std::size_t rank,
                                double noise, std::uint64_t seed);

}  // namespace cssx
