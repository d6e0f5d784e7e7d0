#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cssx/linalg.hpp"
#include "cssx/matrix.hpp"

namespace cssx {

struct OracleResult {
    std::vector<std::size_t> selected;  // ascending
    double residual = 0.0;
    std::size_t evaluated = 0;  // subsets examined
};

constexpr std::size_t kDefaultSubsetBudget = 2'000'000;

/// Enumerates all C(n, k) column subsets in lexicographic order and keeps
/// the residual minimizer; ties go to the lexicographically smaller tuple.
/// Throws BudgetExceededError before doing any work if C(n, k) > budget.
OracleResult exhaustive_best(const DenseMatrix& a, std::size_t k, Norm norm,
                             std::size_t budget = kDefaultSubsetBudget);

/// Best of `trials` uniformly drawn k-subsets (without replacement inside a
/// subset); trial t uses the documented stream seeded with seed + t.
OracleResult uniform_baseline(const DenseMatrix& a, std::size_t k, std::size_t trials,
                              std::uint64_t seed, Norm norm = Norm::frobenius);

/// First k pivots of classical column-pivoted QR applied directly to a.
OracleResult pivoted_qr_baseline(const DenseMatrix& a, std::size_t k,
                                 Norm norm = Norm::frobenius);

}  // namespace cssx
