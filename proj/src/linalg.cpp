#include "cssx/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "cssx/errors.hpp"

namespace cssx {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxSweeps = 60;
// Two columns count as numerically orthogonal once |<p,q>| <= kOrthTol * |p||q|.
constexpr double kOrthTol = 1e-15;

struct RawSvd {
    DenseMatrix u;              // m x r
    std::vector<double> sigma;  // length r, nonincreasing, all > 0 unless r == 0
    DenseMatrix v;              // n x r
};

// One-sided Jacobi on the columns of a tall matrix (rows >= cols).
// Rotations are applied until every column pair is orthogonal relative to
// the product of the column norms; column norms then give the singular
// values and the normalized columns the left factor.
RawSvd jacobi_svd_tall(const DenseMatrix& a, double rank_tol_rel) {
    const std::size_t m = a.rows(), n = a.cols();
    // Column-major working copy so rotations touch contiguous memory.
    std::vector<double> w(m * n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i) w[j * m + i] = a(i, j);
    std::vector<double> vt(n * n, 0.0);  // accumulated rotations, column-major
    for (std::size_t j = 0; j < n; ++j) vt[j * n + j] = 1.0;

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double* wp = &w[p * m];
                double* wq = &w[q * m];
                double alpha = 0.0, beta = 0.0, gamma = 0.0;
                for (std::size_t i = 0; i < m; ++i) {
                    alpha += wp[i] * wp[i];
                    beta += wq[i] * wq[i];
                    gamma += wp[i] * wq[i];
                }
                if (gamma == 0.0 || gamma * gamma <= kOrthTol * kOrthTol * alpha * beta) continue;
                double zeta = (beta - alpha) / (2.0 * gamma);
                double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = c * t;
                for (std::size_t i = 0; i < m; ++i) {
                    double wpi = wp[i], wqi = wq[i];
                    wp[i] = c * wpi - s * wqi;
                    wq[i] = s * wpi + c * wqi;
                }
                double* vp = &vt[p * n];
                double* vq = &vt[q * n];
                for (std::size_t i = 0; i < n; ++i) {
                    double vpi = vp[i], vqi = vq[i];
                    vp[i] = c * vpi - s * vqi;
                    vq[i] = s * vpi + c * vqi;
                }
                rotated = true;
            }
        }
        if (!rotated) break;
    }

    std::vector<double> norms(n);
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += w[j * m + i] * w[j * m + i];
        norms[j] = std::sqrt(s);
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return norms[x] > norms[y]; });

    double sigma_max = n == 0 ? 0.0 : norms[order[0]];
    RawSvd out;
    if (sigma_max == 0.0) return out;
    double cutoff = rank_tol_rel * sigma_max;
    std::size_t r = 0;
    while (r < n && norms[order[r]] > cutoff) ++r;
    r = std::max<std::size_t>(r, 1);  // keep sigma_1 even under an extreme tolerance

    out.u = DenseMatrix(m, r);
    out.v = DenseMatrix(n, r);
    out.sigma.resize(r);
    for (std::size_t jj = 0; jj < r; ++jj) {
        std::size_t j = order[jj];
        out.sigma[jj] = norms[j];
        double inv = 1.0 / norms[j];
        for (std::size_t i = 0; i < m; ++i) out.u(i, jj) = w[j * m + i] * inv;
        for (std::size_t i = 0; i < n; ++i) out.v(i, jj) = vt[j * n + i];
    }
    return out;
}

// Fix signs: largest-magnitude entry of each right singular vector is made
// nonnegative (first such entry wins on ties).
void fix_signs(RawSvd& f) {
    for (std::size_t j = 0; j < f.sigma.size(); ++j) {
        std::size_t arg = 0;
        double best = -1.0;
        for (std::size_t i = 0; i < f.v.rows(); ++i) {
            double mag = std::abs(f.v(i, j));
            if (mag > best) {
                best = mag;
                arg = i;
            }
        }
        if (f.v(arg, j) < 0.0) {
            for (std::size_t i = 0; i < f.v.rows(); ++i) f.v(i, j) = -f.v(i, j);
            for (std::size_t i = 0; i < f.u.rows(); ++i) f.u(i, j) = -f.u(i, j);
        }
    }
}

RawSvd raw_svd(const DenseMatrix& a, double rank_tol_rel) {
    RawSvd f;
    if (a.rows() >= a.cols()) {
        f = jacobi_svd_tall(a, rank_tol_rel);
    } else {
        f = jacobi_svd_tall(a.transposed(), rank_tol_rel);
        std::swap(f.u, f.v);
    }
    fix_signs(f);
    return f;
}

double default_rank_tol(const DenseMatrix& a) {
    return static_cast<double>(std::max(a.rows(), a.cols())) * kEps;
}

}  // namespace

DenseMatrix SvdFactors::v_top_t(std::size_t k) const {
    DenseMatrix out(k, v.rows());
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < v.rows(); ++i) out(j, i) = v(i, j);
    return out;
}

DenseMatrix SvdFactors::tail_scaled_vt(std::size_t k) const {
    if (k >= rank) return DenseMatrix();
    DenseMatrix out(rank - k, v.rows());
    for (std::size_t j = k; j < rank; ++j)
        for (std::size_t i = 0; i < v.rows(); ++i) out(j - k, i) = sigma[j] * v(i, j);
    return out;
}

double SvdFactors::leverage_row_norm_squared(std::size_t i, std::size_t k) const {
    double s = 0.0;
    for (std::size_t j = 0; j < k; ++j) s += v(i, j) * v(i, j);
    return s;
}

SvdFactors svd(const DenseMatrix& a, double rank_tol) {
    if (a.empty()) throw std::invalid_argument("svd: empty matrix");
    if (rank_tol < 0.0) throw std::invalid_argument("svd: negative rank tolerance");
    double tol = rank_tol > 0.0 ? rank_tol : default_rank_tol(a);
    RawSvd f = raw_svd(a, tol);
    if (f.sigma.empty()) throw ZeroMatrixError();
    SvdFactors out;
    out.rank = f.sigma.size();
    out.u = std::move(f.u);
    out.sigma = std::move(f.sigma);
    out.v = std::move(f.v);
    return out;
}

std::vector<double> singular_values(const DenseMatrix& a) {
    if (a.empty()) return {};
    RawSvd f = raw_svd(a, 0.0);
    std::vector<double> out(std::min(a.rows(), a.cols()), 0.0);
    for (std::size_t i = 0; i < f.sigma.size() && i < out.size(); ++i) out[i] = f.sigma[i];
    return out;
}

double spectral_norm(const DenseMatrix& a) {
    auto s = singular_values(a);
    return s.empty() ? 0.0 : s[0];
}

double frobenius_norm(const DenseMatrix& a) {
    double s = 0.0;
    for (double x : a.entries()) s += x * x;
    return std::sqrt(s);
}

DenseMatrix pseudoinverse(const DenseMatrix& a, double rank_tol) {
    if (a.empty()) throw std::invalid_argument("pseudoinverse: empty matrix");
    double tol = rank_tol > 0.0 ? rank_tol : default_rank_tol(a);
    RawSvd f = raw_svd(a, tol);
    DenseMatrix out(a.cols(), a.rows());
    for (std::size_t j = 0; j < f.sigma.size(); ++j) {
        double inv = 1.0 / f.sigma[j];
        for (std::size_t i = 0; i < a.cols(); ++i) {
            double vij = f.v(i, j) * inv;
            if (vij == 0.0) continue;
            for (std::size_t l = 0; l < a.rows(); ++l) out(i, l) += vij * f.u(l, j);
        }
    }
    return out;
}

DenseMatrix orthonormal_basis(const DenseMatrix& c) {
    const std::size_t m = c.rows(), k = c.cols();
    std::vector<std::vector<double>> basis;
    basis.reserve(k);
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<double> v(m);
        double norm0 = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            v[i] = c(i, j);
            norm0 += v[i] * v[i];
        }
        norm0 = std::sqrt(norm0);
        if (norm0 == 0.0) continue;
        // Modified Gram-Schmidt, two passes.
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& q : basis) {
                double dot = 0.0;
                for (std::size_t i = 0; i < m; ++i) dot += q[i] * v[i];
                for (std::size_t i = 0; i < m; ++i) v[i] -= dot * q[i];
            }
        }
        double nv = 0.0;
        for (std::size_t i = 0; i < m; ++i) nv += v[i] * v[i];
        nv = std::sqrt(nv);
        if (nv <= 1e-12 * norm0) continue;  // numerically dependent column
        double inv = 1.0 / nv;
        for (std::size_t i = 0; i < m; ++i) v[i] *= inv;
        basis.push_back(std::move(v));
    }
    DenseMatrix q(m, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < m; ++i) q(i, j) = basis[j][i];
    return q;
}

double projection_residual(const DenseMatrix& a, std::span<const std::size_t> col_indices,
                           Norm norm) {
    std::vector<std::size_t> seen(col_indices.begin(), col_indices.end());
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw InvalidSelectionError("projection_residual: duplicate column index");
    for (std::size_t j : seen) {
        if (j >= a.cols()) throw InvalidSelectionError("projection_residual: index out of range");
    }
    DenseMatrix c = gather_columns(a, col_indices);
    DenseMatrix q = orthonormal_basis(c);
    DenseMatrix residual = a;
    if (!q.empty()) {
        DenseMatrix qta = matmul(q.transposed(), a);
        residual = subtract(a, matmul(q, qta));
    }
    return norm == Norm::frobenius ? frobenius_norm(residual) : spectral_norm(residual);
}

double best_rank_k_residual(const SvdFactors& f, std::size_t k, Norm norm) {
    if (k == 0) throw std::invalid_argument("best_rank_k_residual: k must be positive");
    if (k >= f.rank) return 0.0;
    if (norm == Norm::spectral) return f.sigma[k];
    double s = 0.0;
    for (std::size_t i = f.rank; i-- > k;) s += f.sigma[i] * f.sigma[i];
    return std::sqrt(s);
}

}  // namespace cssx
