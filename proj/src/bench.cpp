#include "cssx/bench.hpp"

#include <cmath>
#include <stdexcept>

#include "cssx/errors.hpp"
#include "cssx/generate.hpp"
#include "cssx/io.hpp"
#include "cssx/parallel.hpp"

namespace cssx {

DenseMatrix materialize(const MatrixDescriptor& desc) {
    switch (desc.source) {
        case MatrixDescriptor::Source::file:
            return read_matrix(desc.path, desc.format == "mm" ? MatrixFormat::matrix_market
                                                              : MatrixFormat::csv);
        case MatrixDescriptor::Source::gaussian:
            return gaussian_matrix(desc.rows, desc.cols, desc.seed);
        case MatrixDescriptor::Source::low_rank_noise:
            return low_rank_plus_noise(desc.rows, desc.cols, desc.rank, desc.noise, desc.seed);
    }
    throw std::logic_error("materialize: unknown source");
}

RankPreservationCheck run_rank_preservation_check(const DenseMatrix& a, const CsspConfig& config,
                                                  std::size_t trials, std::size_t threads) {
    SvdFactors factors = svd(a, config.rank_tol);
    if (config.k > factors.rank)
        throw RankDeficientError("rank preservation check: k exceeds numerical rank");
    ProbabilityVector probs =
        config.prob_kind == ProbKind::hybrid
            ? hybrid_probabilities(a, factors, config.k, config.residual_tol)
            : leverage_probabilities(factors, config.k);
    DenseMatrix vkt = factors.v_top_t(config.k);

    RankPreservationCheck check;
    check.c = choose_c(config.k, config.c_mode);
    check.trials.resize(trials);
    parallel_for(trials, threads, [&](std::size_t t) {
        ColumnSample sample = sample_exactly_c(probs, check.c, config.seed + t);
        DenseMatrix omega = apply_sample(vkt, sample);
        double sigma_k = singular_values(omega)[config.k - 1];
        check.trials[t] = {config.seed + t, sigma_k, sigma_k >= check.threshold};
    });
    std::size_t held = 0;
    for (const auto& t : check.trials) held += t.held ? 1 : 0;
    check.hold_fraction = trials == 0 ? 0.0 : static_cast<double>(held) / trials;
    return check;
}

TailEnergyCheck run_tail_energy_check(const DenseMatrix& a, const CsspConfig& config,
                                      std::size_t trials, std::size_t threads) {
    SvdFactors factors = svd(a, config.rank_tol);
    if (config.k >= factors.rank)
        throw RankDeficientError("tail energy check: needs k below the numerical rank");
    ProbabilityVector probs =
        config.prob_kind == ProbKind::hybrid
            ? hybrid_probabilities(a, factors, config.k, config.residual_tol)
            : leverage_probabilities(factors, config.k);
    DenseMatrix tail = factors.tail_scaled_vt(config.k);
    double baseline_sq = 0.0;
    for (std::size_t i = config.k; i < factors.rank; ++i)
        baseline_sq += factors.sigma[i] * factors.sigma[i];

    TailEnergyCheck check;
    check.c = choose_c(config.k, config.c_mode);
    check.trials.resize(trials);
    parallel_for(trials, threads, [&](std::size_t t) {
        ColumnSample sample = sample_exactly_c(probs, check.c, config.seed + t);
        DenseMatrix sampled = apply_sample(tail, sample);
        double fro = frobenius_norm(sampled);
        check.trials[t] = {config.seed + t, fro * fro / baseline_sq};
    });
    double sum = 0.0;
    for (const auto& t : check.trials) sum += t.ratio;
    check.mean_ratio = trials == 0 ? 0.0 : sum / static_cast<double>(trials);
    return check;
}

BoundsCheck run_bounds_check(const DenseMatrix& a, const CsspConfig& config, std::size_t trials,
                             std::size_t threads) {
    SvdFactors factors = svd(a, config.rank_tol);
    if (config.k > factors.rank)
        throw RankDeficientError("bounds check: k exceeds numerical rank");

    BoundsCheck check;
    check.trials.resize(trials);
    parallel_for(trials, threads, [&](std::size_t t) {
        BoundsTrial& trial = check.trials[t];
        trial.seed = config.seed + t;
        CsspConfig run = config;
        run.seed = trial.seed;
        try {
            trial.result = two_stage_select(a, factors, run);
            trial.ok = true;
        } catch (const SampleRankLossError&) {
            trial.ok = false;  // counts against every held fraction
            return;
        }
        const CsspResult& r = trial.result;
        trial.fro_bound_held = r.residual_fro <= r.bound_factor_fro * r.baseline_fro;
        trial.spec_bound_held =
            r.residual_spec <= spectral_bound(config.k, r.c_used, r.baseline_spec, r.baseline_fro);
        double c_quarter = std::pow(static_cast<double>(r.c_used), 0.25);
        trial.tail_spec_held = r.tail_spec <= r.baseline_spec + 4.0 / c_quarter * r.baseline_fro;
        double inv_sigma = 1.0 / r.sigma_k_selected;
        trial.structural_ok =
            r.residual_fro <= r.baseline_fro + inv_sigma * r.tail_fro + 1e-8 &&
            r.residual_spec <= r.baseline_spec + inv_sigma * r.tail_spec + 1e-8;
        double chain = 2.0 * static_cast<double>(config.k) *
                       static_cast<double>(r.c_used - config.k);
        trial.chain_ok = r.sigma_k_selected >= r.sigma_k_sampled / std::sqrt(chain + 1.0);
    });

    std::size_t fro = 0, spec = 0, tail = 0;
    for (const auto& t : check.trials) {
        if (!t.ok) {
            ++check.sample_rank_losses;
            continue;
        }
        fro += t.fro_bound_held ? 1 : 0;
        spec += t.spec_bound_held ? 1 : 0;
        tail += t.tail_spec_held ? 1 : 0;
        check.structural_violations += t.structural_ok ? 0 : 1;
        check.chain_violations += t.chain_ok ? 0 : 1;
    }
    double denom = trials == 0 ? 1.0 : static_cast<double>(trials);
    check.hold_fraction_fro = static_cast<double>(fro) / denom;
    check.hold_fraction_spec = static_cast<double>(spec) / denom;
    check.tail_spec_hold_fraction = static_cast<double>(tail) / denom;
    return check;
}

OracleCheck run_oracle_check(const DenseMatrix& a, const CsspConfig& config, std::size_t budget) {
    OracleCheck check;
    try {
        check.oracle = exhaustive_best(a, config.k, config.norm, budget);
    } catch (const BudgetExceededError&) {
        check.budget_exceeded = true;
        return check;
    }
    try {
        check.algorithm = boost(a, config);
    } catch (const AllTrialsFailedError&) {
        return check;
    }
    double alg = config.norm == Norm::frobenius ? check.algorithm->residual_fro
                                                : check.algorithm->residual_spec;
    if (check.oracle->residual > 0.0) check.ratio = alg / check.oracle->residual;
    return check;
}

ExperimentReport run_bench(const DenseMatrix& a, const MatrixDescriptor& desc,
                           const CsspConfig& config, const BenchOptions& options) {
    ExperimentReport report;
    report.matrix = desc;
    report.config = config;
    report.options = options;
    if (options.lemma1)
        report.rank_preservation =
            run_rank_preservation_check(a, config, options.trials, options.threads);
    if (options.tail_energy)
        report.tail_energy = run_tail_energy_check(a, config, options.trials, options.threads);
    if (options.bounds)
        report.bounds = run_bounds_check(a, config, options.trials, options.threads);
    if (options.oracle) report.oracle = run_oracle_check(a, config, options.oracle_budget);
    return report;
}

}  // namespace cssx
