#include "cssx/generate.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "cssx/rng.hpp"

namespace cssx {

namespace {

std::vector<double> gaussian_entries(std::size_t count, std::mt19937_64& gen) {
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; i += 2) {
        double u1 = unit_uniform(gen);
        double u2 = unit_uniform(gen);
        double r = std::sqrt(-2.0 * std::log(u1));
        double theta = 2.0 * std::numbers::pi * u2;
        out[i] = r * std::cos(theta);
        if (i + 1 < count) out[i + 1] = r * std::sin(theta);
    }
    return out;
}

}  // namespace

DenseMatrix gaussian_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("gaussian_matrix: empty shape");
    std::mt19937_64 gen(seed);
    return DenseMatrix(rows, cols, gaussian_entries(rows * cols, gen));
}

DenseMatrix low_rank_plus_noise(std::size_t rows, std::size_t cols, std::size_t rank,
                                double noise, std::uint64_t seed) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("low_rank_plus_noise: empty shape");
    if (rank == 0 || rank > std::min(rows, cols))
        throw std::invalid_argument("low_rank_plus_noise: rank out of range");
    if (noise < 0.0) throw std::invalid_argument("low_rank_plus_noise: negative noise");

    std::mt19937_64 gen(seed);
    DenseMatrix g1(rows, rank, gaussian_entries(rows * rank, gen));
    DenseMatrix g2(cols, rank, gaussian_entries(cols * rank, gen));
    std::vector<double> g3 = gaussian_entries(rows * cols, gen);

    DenseMatrix out(rows, cols);
    double inv_sqrt_rank = 1.0 / std::sqrt(static_cast<double>(rank));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            double s = 0.0;
            for (std::size_t l = 0; l < rank; ++l) s += g1(i, l) * g2(j, l);
            out(i, j) = s * inv_sqrt_rank + noise * g3[i * cols + j];
        }
    }
    return out;
}

}  // namespace cssx
