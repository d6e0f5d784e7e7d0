#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cssx/matrix.hpp"

namespace cssx {

enum class Norm { frobenius, spectral };

/// Thin SVD truncated at the numerical rank: a = u * diag(sigma) * v^T.
/// u is m x rank and v is n x rank with orthonormal columns; sigma is
/// nonincreasing and strictly above the rank tolerance. Right singular
/// vectors carry a fixed sign (largest-magnitude entry nonnegative) so that
/// leverage scores and downstream pivot decisions are reproducible.
struct SvdFactors {
    DenseMatrix u;
    std::vector<double> sigma;
    DenseMatrix v;
    std::size_t rank = 0;

    /// First k columns of v, as the k x n matrix v_top^T.
    DenseMatrix v_top_t(std::size_t k) const;
    /// diag(sigma_{k+1..rank}) * V_tail^T, a (rank-k) x n matrix.
    /// Empty when k == rank.
    DenseMatrix tail_scaled_vt(std::size_t k) const;
    /// Squared norm of row i of V_k (the leverage score against the top-k
    /// right singular subspace, before the 1/k normalization).
    double leverage_row_norm_squared(std::size_t i, std::size_t k) const;
};

/// rank_tol <= 0 selects the default max(m, n) * eps, relative to sigma_1.
SvdFactors svd(const DenseMatrix& a, double rank_tol = 0.0);

/// All min(m, n) singular values, nonincreasing, zeros included.
/// Unlike svd() this accepts the zero matrix.
std::vector<double> singular_values(const DenseMatrix& a);

double spectral_norm(const DenseMatrix& a);
double frobenius_norm(const DenseMatrix& a);

/// Moore-Penrose pseudoinverse via the SVD. The zero matrix maps to the
/// zero matrix of transposed shape.
DenseMatrix pseudoinverse(const DenseMatrix& a, double rank_tol = 0.0);

/// ||a - C C^+ a|| where C collects the given distinct columns of a.
/// Invariant under positive rescaling of the selected columns.
double projection_residual(const DenseMatrix& a, std::span<const std::size_t> col_indices,
                           Norm norm);

/// ||a - a_k||: sigma_{k+1} (spectral) or sqrt(sum of squared tail sigmas)
/// (frobenius); zero when k >= rank.
double best_rank_k_residual(const SvdFactors& f, std::size_t k, Norm norm);

/// Orthonormal basis of the column span, dropping numerically dependent
/// columns (relative tolerance 1e-12 per column).
DenseMatrix orthonormal_basis(const DenseMatrix& c);

}  // namespace cssx
