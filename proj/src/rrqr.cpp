#include "cssx/rrqr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "cssx/errors.hpp"
#include "cssx/linalg.hpp"

namespace cssx {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Solve B X = RHS in place for a small dense B via LU with partial pivoting.
// Returns false if a pivot collapses (B numerically singular).
bool solve_inplace(DenseMatrix b, DenseMatrix& rhs) {
    const std::size_t k = b.rows();
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        double best = std::abs(b(col, col));
        for (std::size_t i = col + 1; i < k; ++i) {
            double v = std::abs(b(i, col));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best == 0.0) return false;
        if (piv != col) {
            for (std::size_t j = 0; j < k; ++j) std::swap(b(col, j), b(piv, j));
            for (std::size_t j = 0; j < rhs.cols(); ++j) std::swap(rhs(col, j), rhs(piv, j));
        }
        double inv = 1.0 / b(col, col);
        for (std::size_t i = col + 1; i < k; ++i) {
            double factor = b(i, col) * inv;
            if (factor == 0.0) continue;
            b(i, col) = 0.0;
            for (std::size_t j = col + 1; j < k; ++j) b(i, j) -= factor * b(col, j);
            for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(i, j) -= factor * rhs(col, j);
        }
    }
    for (std::size_t col = k; col-- > 0;) {
        double inv = 1.0 / b(col, col);
        for (std::size_t j = 0; j < rhs.cols(); ++j) {
            double v = rhs(col, j);
            for (std::size_t l = col + 1; l < k; ++l) v -= b(col, l) * rhs(l, j);
            rhs(col, j) = v * inv;
        }
    }
    return true;
}

}  // namespace

std::vector<std::size_t> pivoted_qr_columns(const DenseMatrix& a, std::size_t k) {
    const std::size_t m = a.rows(), n = a.cols();
    if (k == 0 || k > n) throw std::invalid_argument("pivoted_qr_columns: bad k");

    // Residual copy; norms are recomputed from it at every step rather than
    // downdated, which keeps pivot decisions accurate.
    DenseMatrix r = a;
    std::vector<bool> taken(n, false);
    std::vector<std::size_t> pivots;
    pivots.reserve(k);
    std::vector<std::vector<double>> basis;

    double initial_max = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        initial_max = std::max(initial_max, column_norm_squared(r, j));
    initial_max = std::sqrt(initial_max);
    double rank_floor = static_cast<double>(std::max(m, n)) * kEps * initial_max;

    for (std::size_t step = 0; step < k; ++step) {
        double max_norm = -1.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (taken[j]) continue;
            max_norm = std::max(max_norm, std::sqrt(column_norm_squared(r, j)));
        }
        if (max_norm <= rank_floor) {
            throw RankDeficientError("pivoted QR: rank below requested k = " + std::to_string(k));
        }
        std::size_t pick = n;
        for (std::size_t j = 0; j < n; ++j) {
            if (taken[j]) continue;
            double norm = std::sqrt(column_norm_squared(r, j));
            if (norm >= max_norm * (1.0 - 1e-12)) {
                pick = j;
                break;  // lowest index among near-maximal norms
            }
        }
        taken[pick] = true;
        pivots.push_back(pick);

        std::vector<double> q(m);
        for (std::size_t i = 0; i < m; ++i) q[i] = r(i, pick);
        double norm = std::sqrt(column_norm_squared(r, pick));
        for (std::size_t i = 0; i < m; ++i) q[i] /= norm;
        basis.push_back(q);
        for (std::size_t j = 0; j < n; ++j) {
            if (taken[j]) continue;
            double dot = 0.0;
            for (std::size_t i = 0; i < m; ++i) dot += q[i] * r(i, j);
            for (std::size_t i = 0; i < m; ++i) r(i, j) -= dot * q[i];
        }
    }
    return pivots;
}

RrqrSelection strong_rrqr_select(const DenseMatrix& m, double f, std::size_t max_swaps) {
    const std::size_t k = m.rows(), c = m.cols();
    if (k == 0) throw std::invalid_argument("strong_rrqr_select: empty input");
    if (c < k) throw std::invalid_argument("strong_rrqr_select: fewer columns than rows");
    if (f < 1.0) throw std::invalid_argument("strong_rrqr_select: f must be >= 1");
    if (max_swaps == 0) max_swaps = 100 * k * c;

    std::vector<double> sigma = singular_values(m);
    double sigma_k_in = sigma[k - 1];
    double rank_floor = static_cast<double>(std::max(k, c)) * kEps * sigma[0];
    if (sigma_k_in <= rank_floor) {
        throw RankDeficientError("strong_rrqr_select: input is rank deficient");
    }

    RrqrSelection result;
    result.sigma_k_in = sigma_k_in;
    std::vector<std::size_t> selected = pivoted_qr_columns(m, k);

    if (c > k) {
        std::vector<std::size_t> unselected;
        unselected.reserve(c - k);
        {
            std::vector<bool> in_sel(c, false);
            for (std::size_t j : selected) in_sel[j] = true;
            for (std::size_t j = 0; j < c; ++j)
                if (!in_sel[j]) unselected.push_back(j);
        }

        // Requiring growth beyond rounding noise keeps the loop terminating
        // when f is exactly one and the input carries duplicate columns
        // (their growth ratio is exactly one, computed as 1 +/- eps).
        const double swap_threshold = f * (1.0 + 1e-12);
        for (;;) {
            // T = B^{-1} M_unselected; |T(i, j)| is the |det| growth factor of
            // swapping selected position i with unselected column j (Cramer).
            DenseMatrix t = gather_columns(m, unselected);
            if (!solve_inplace(gather_columns(m, selected), t)) {
                throw std::logic_error("strong_rrqr_select: selected block lost invertibility");
            }
            bool swapped = false;
            for (std::size_t i = 0; i < k && !swapped; ++i) {
                for (std::size_t j = 0; j < unselected.size() && !swapped; ++j) {
                    if (std::abs(t(i, j)) > swap_threshold) {
                        std::size_t incoming = unselected[j];
                        unselected[j] = selected[i];
                        selected[i] = incoming;
                        // keep the scan order deterministic
                        std::sort(unselected.begin(), unselected.end());
                        ++result.swaps;
                        swapped = true;
                    }
                }
            }
            if (!swapped) break;
            if (result.swaps > max_swaps) {
                throw NonTerminationError("strong_rrqr_select: swap budget exceeded (" +
                                          std::to_string(max_swaps) + ")");
            }
        }
    }

    std::sort(selected.begin(), selected.end());
    result.selected = std::move(selected);
    std::vector<double> sigma_out = singular_values(gather_columns(m, result.selected));
    result.sigma_k_out = sigma_out[k - 1];

    // Termination means every |T(i,j)| <= f, which forces the quotient bound.
    double bound = sigma_k_in / std::sqrt(1.0 + f * f * static_cast<double>(k) *
                                                    static_cast<double>(c - k));
    if (result.sigma_k_out < bound * (1.0 - 1e-9)) {
        throw std::logic_error("strong_rrqr_select: sigma_k quotient bound violated");
    }
    return result;
}

}  // namespace cssx
