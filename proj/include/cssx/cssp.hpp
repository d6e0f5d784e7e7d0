#pragma once

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <vector>

#include "cssx/linalg.hpp"
#include "cssx/matrix.hpp"
#include "cssx/sampling.hpp"

namespace cssx {

struct CsspConfig {
    std::size_t k = 1;
    CMode c_mode = CMode::practical();
    double f = std::numbers::sqrt2;
    std::uint64_t seed = 0;
    ProbKind prob_kind = ProbKind::hybrid;
    double rank_tol = 0.0;        // <= 0 selects max(m, n) * eps
    double residual_tol = 1e-12;  // hybrid -> leverage fallback threshold
    std::size_t boost_trials = 1;
    Norm norm = Norm::frobenius;  // minimized across boosted trials
};

struct CsspResult {
    std::vector<std::size_t> selected;  // k distinct column indices, ascending
    double residual_fro = 0.0;
    double residual_spec = 0.0;
    double baseline_fro = 0.0;   // ||a - a_k||_F
    double baseline_spec = 0.0;  // ||a - a_k||_2
    double bound_factor_fro = 0.0;
    double bound_spec_term1 = 0.0;
    double bound_spec_term2 = 0.0;
    std::size_t c_used = 0;
    double sigma_k_sampled = 0.0;   // sigma_k of the k x c sampled matrix
    double sigma_k_selected = 0.0;  // sigma_k of its selected k x k block
    std::uint64_t seed_used = 0;
    double tail_fro = 0.0;   // norms of the sampled singular-value tail,
    double tail_spec = 0.0;  // kept as per-run diagnostics
    std::size_t swaps = 0;
};

/// 1 + 8 sqrt(2k(c-k) + 1).
double frobenius_bound_factor(std::size_t k, std::size_t c);

/// (1 + 2 sqrt(2k(c-k)+1)) * baseline_spec
///   + (8 sqrt(2k(c-k)+1) / c^{1/4}) * baseline_fro.
double spectral_bound(std::size_t k, std::size_t c, double baseline_spec, double baseline_fro);

/// The two-stage selection: leverage-based sampling of c columns followed by
/// strong rank-revealing selection of exactly k of them. Deterministic given
/// (a, config). Throws SampleRankLossError when the sampled k x c matrix
/// loses rank (retry with a fresh seed), RankDeficientError when k exceeds
/// the numerical rank of a.
CsspResult two_stage_select(const DenseMatrix& a, const CsspConfig& config);

/// Same, reusing a precomputed SVD of a.
CsspResult two_stage_select(const DenseMatrix& a, const SvdFactors& factors,
                            const CsspConfig& config);

/// Best of boost_trials runs with per-trial seeds seed+0 .. seed+trials-1,
/// skipping rank-loss failures; minimizes the configured norm with earliest
/// trial winning ties. Throws AllTrialsFailedError when no trial succeeds.
CsspResult boost(const DenseMatrix& a, const CsspConfig& config);

}  // namespace cssx
