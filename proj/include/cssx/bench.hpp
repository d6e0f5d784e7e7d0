#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cssx/cssp.hpp"
#include "cssx/matrix.hpp"
#include "cssx/oracle.hpp"

namespace cssx {

/// Where the experiment matrix comes from; echoed into reports so a run can
/// be reproduced from its JSON alone.
struct MatrixDescriptor {
    enum class Source { file, gaussian, low_rank_noise };
    Source source = Source::gaussian;
    std::string path;    // file source
    std::string format;  // "mm" | "csv"
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t rank = 0;  // low_rank_noise
    double noise = 0.0;    // low_rank_noise
    std::uint64_t seed = 0;
};

DenseMatrix materialize(const MatrixDescriptor& desc);

/// Sampling-stage rank preservation: fraction of trials in which sigma_k of
/// the sampled k x c matrix stays at or above 1/2. The deterministic stage
/// is not involved.
struct RankPreservationTrial {
    std::uint64_t seed = 0;
    double sigma_k_sampled = 0.0;
    bool held = false;
};
struct RankPreservationCheck {
    std::size_t c = 0;
    double threshold = 0.5;
    std::vector<RankPreservationTrial> trials;
    double hold_fraction = 0.0;
};

/// Unbiasedness of the sampled tail energy: per-trial ratio
/// ||tail * S1 D1||_F^2 / ||a - a_k||_F^2 and its mean across trials.
struct TailEnergyTrial {
    std::uint64_t seed = 0;
    double ratio = 0.0;
};
struct TailEnergyCheck {
    std::size_t c = 0;
    std::vector<TailEnergyTrial> trials;
    double mean_ratio = 0.0;
};

/// Full-pipeline runs with the per-run inequalities evaluated on each one.
struct BoundsTrial {
    std::uint64_t seed = 0;
    bool ok = false;  // false: the sampled matrix lost rank
    CsspResult result;
    bool fro_bound_held = false;   // residual_fro <= factor * baseline_fro
    bool spec_bound_held = false;  // residual_spec <= spectral_bound(...)
    bool tail_spec_held = false;   // tail_spec <= baseline_spec + 4 c^{-1/4} baseline_fro
    bool structural_ok = false;    // residual <= baseline + tail / sigma_k_selected (both norms)
    bool chain_ok = false;         // sigma_k_selected >= sigma_k_sampled / sqrt(1 + f^2 k (c-k))
};
struct BoundsCheck {
    std::vector<BoundsTrial> trials;
    double hold_fraction_fro = 0.0;
    double hold_fraction_spec = 0.0;
    double tail_spec_hold_fraction = 0.0;
    std::size_t structural_violations = 0;
    std::size_t chain_violations = 0;
    std::size_t sample_rank_losses = 0;
};

/// Boosted algorithm result against the exhaustive optimum.
struct OracleCheck {
    bool budget_exceeded = false;
    std::optional<OracleResult> oracle;
    std::optional<CsspResult> algorithm;  // empty when every boosted trial failed
    std::optional<double> ratio;          // algorithm residual / oracle residual
};

struct BenchOptions {
    bool lemma1 = false;  // external check names follow the CLI
    bool tail_energy = false;
    bool bounds = false;
    bool oracle = false;
    std::size_t trials = 100;
    std::size_t threads = 1;
    std::size_t oracle_budget = kDefaultSubsetBudget;
};

struct ExperimentReport {
    MatrixDescriptor matrix;
    CsspConfig config;
    BenchOptions options;
    std::optional<RankPreservationCheck> rank_preservation;
    std::optional<TailEnergyCheck> tail_energy;
    std::optional<BoundsCheck> bounds;
    std::optional<OracleCheck> oracle;
};

/// Trial t of every check uses seed config.seed + t; trials may fan out
/// across workers and land in per-trial slots, so records are identical for
/// any thread count.
RankPreservationCheck run_rank_preservation_check(const DenseMatrix& a, const CsspConfig& config,
                                                  std::size_t trials, std::size_t threads);
TailEnergyCheck run_tail_energy_check(const DenseMatrix& a, const CsspConfig& config,
                                      std::size_t trials, std::size_t threads);
BoundsCheck run_bounds_check(const DenseMatrix& a, const CsspConfig& config, std::size_t trials,
                             std::size_t threads);
OracleCheck run_oracle_check(const DenseMatrix& a, const CsspConfig& config, std::size_t budget);

ExperimentReport run_bench(const DenseMatrix& a, const MatrixDescriptor& desc,
                           const CsspConfig& config, const BenchOptions& options);

}  // namespace cssx
