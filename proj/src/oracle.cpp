#include "cssx/oracle.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "cssx/errors.hpp"
#include "cssx/rrqr.hpp"

namespace cssx {

namespace {

// C(n, k), capped at limit + 1 to avoid overflow.
std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t limit) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned long long result = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        unsigned long long factor = n - k + i;
        if (result > (std::numeric_limits<unsigned long long>::max)() / factor) return limit + 1;
        result = result * factor / i;  // exact: product of i consecutive ints
        if (result > limit) return limit + 1;
    }
    return static_cast<std::size_t>(result);
}

}  // namespace

OracleResult exhaustive_best(const DenseMatrix& a, std::size_t k, Norm norm, std::size_t budget) {
    const std::size_t n = a.cols();
    if (k == 0 || k > n) throw std::invalid_argument("exhaustive_best: k out of range");
    std::size_t count = binomial_capped(n, k, budget);
    if (count > budget) {
        throw BudgetExceededError("exhaustive_best: C(" + std::to_string(n) + ", " +
                                  std::to_string(k) + ") exceeds budget " + std::to_string(budget));
    }

    std::vector<std::size_t> subset(k);
    for (std::size_t i = 0; i < k; ++i) subset[i] = i;

    OracleResult best;
    best.evaluated = count;
    bool first = true;
    for (;;) {
        double residual = projection_residual(a, subset, norm);
        if (first || residual < best.residual) {
            best.residual = residual;
            best.selected = subset;
            first = false;
        }
        // next lexicographic k-combination of [0, n)
        std::size_t i = k;
        while (i-- > 0) {
            if (subset[i] != i + n - k) {
                ++subset[i];
                for (std::size_t j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
                break;
            }
            if (i == 0) return best;
        }
    }
}

OracleResult uniform_baseline(const DenseMatrix& a, std::size_t k, std::size_t trials,
                              std::uint64_t seed, Norm norm) {
    const std::size_t n = a.cols();
    if (k == 0 || k > n) throw std::invalid_argument("uniform_baseline: k out of range");
    if (trials == 0) throw std::invalid_argument("uniform_baseline: trials must be positive");

    OracleResult best;
    best.evaluated = trials;
    std::vector<std::size_t> pool(n);
    for (std::size_t t = 0; t < trials; ++t) {
        std::mt19937_64 gen(seed + t);
        for (std::size_t i = 0; i < n; ++i) pool[i] = i;
        // partial Fisher-Yates; modulo reduction of the 64-bit stream
        for (std::size_t i = 0; i < k; ++i) {
            std::size_t j = i + static_cast<std::size_t>(gen() % (n - i));
            std::swap(pool[i], pool[j]);
        }
        std::vector<std::size_t> subset(pool.begin(), pool.begin() + k);
        std::sort(subset.begin(), subset.end());
        double residual = projection_residual(a, subset, norm);
        if (t == 0 || residual < best.residual ||
            (residual == best.residual && subset < best.selected)) {
            best.residual = residual;
            best.selected = subset;
        }
    }
    return best;
}

OracleResult pivoted_qr_baseline(const DenseMatrix& a, std::size_t k, Norm norm) {
    if (k == 0 || k > a.cols()) throw std::invalid_argument("pivoted_qr_baseline: k out of range");
    SvdFactors f = svd(a);
    if (k > f.rank) {
        throw RankDeficientError("pivoted_qr_baseline: k = " + std::to_string(k) +
                                 " exceeds numerical rank " + std::to_string(f.rank));
    }
    OracleResult out;
    out.selected = pivoted_qr_columns(a, k);
    std::sort(out.selected.begin(), out.selected.end());
    out.residual = projection_residual(a, out.selected, norm);
    out.evaluated = 1;
    return out;
}

}  // namespace cssx
