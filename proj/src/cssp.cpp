#include "cssx/cssp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "cssx/errors.hpp"
#include "cssx/rrqr.hpp"

namespace cssx {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void validate_config(const CsspConfig& config) {
    if (config.k == 0) throw std::invalid_argument("CsspConfig: k must be positive");
    if (config.f < 1.0) throw std::invalid_argument("CsspConfig: f must be >= 1");
    if (config.boost_trials == 0)
        throw std::invalid_argument("CsspConfig: boost_trials must be positive");
}

// Internal consistency gates; violations mean a bug, not bad input.
void check_result(const CsspResult& r, double f) {
    double scale = 1.0 + r.baseline_fro;
    if (r.residual_fro < r.baseline_fro - 1e-9 * scale ||
        r.residual_spec < r.baseline_spec - 1e-9 * scale) {
        throw std::logic_error("two_stage_select: residual dropped below the rank-k baseline");
    }
    double inv_sigma = 1.0 / r.sigma_k_selected;
    if (r.residual_fro > r.baseline_fro + inv_sigma * r.tail_fro + 1e-8 ||
        r.residual_spec > r.baseline_spec + inv_sigma * r.tail_spec + 1e-8) {
        throw std::logic_error("two_stage_select: structural residual bound violated");
    }
    double chain = static_cast<double>(r.selected.size()) *
                   static_cast<double>(r.c_used - r.selected.size());
    if (r.sigma_k_selected < r.sigma_k_sampled / std::sqrt(1.0 + f * f * chain) * (1.0 - 1e-9)) {
        throw std::logic_error("two_stage_select: sigma_k chain bound violated");
    }
}

}  // namespace

double frobenius_bound_factor(std::size_t k, std::size_t c) {
    if (c < k) throw std::invalid_argument("frobenius_bound_factor: c < k");
    double prod = 2.0 * static_cast<double>(k) * static_cast<double>(c - k);
    return 1.0 + 8.0 * std::sqrt(prod + 1.0);
}

double spectral_bound(std::size_t k, std::size_t c, double baseline_spec, double baseline_fro) {
    if (c < k) throw std::invalid_argument("spectral_bound: c < k");
    if (baseline_spec < 0.0 || baseline_fro < 0.0)
        throw std::invalid_argument("spectral_bound: negative baseline");
    double root = std::sqrt(2.0 * static_cast<double>(k) * static_cast<double>(c - k) + 1.0);
    double c_quarter = std::pow(static_cast<double>(c), 0.25);
    return (1.0 + 2.0 * root) * baseline_spec + (8.0 * root / c_quarter) * baseline_fro;
}

CsspResult two_stage_select(const DenseMatrix& a, const CsspConfig& config) {
    validate_config(config);
    return two_stage_select(a, svd(a, config.rank_tol), config);
}

CsspResult two_stage_select(const DenseMatrix& a, const SvdFactors& factors,
                            const CsspConfig& config) {
    validate_config(config);
    const std::size_t k = config.k;
    if (k > factors.rank) {
        throw RankDeficientError("two_stage_select: k = " + std::to_string(k) +
                                 " exceeds numerical rank " + std::to_string(factors.rank));
    }

    ProbabilityVector probs = config.prob_kind == ProbKind::hybrid
                                  ? hybrid_probabilities(a, factors, k, config.residual_tol)
                                  : leverage_probabilities(factors, k);
    std::size_t c = choose_c(k, config.c_mode);
    ColumnSample sample = sample_exactly_c(probs, c, config.seed);

    DenseMatrix omega = apply_sample(factors.v_top_t(k), sample);
    std::vector<double> omega_sigma = singular_values(omega);
    double sigma_k_sampled = omega_sigma[k - 1];
    double rank_floor = static_cast<double>(std::max(k, c)) * kEps * omega_sigma[0];
    if (config.rank_tol > 0.0) rank_floor = config.rank_tol * omega_sigma[0];
    if (sigma_k_sampled <= rank_floor) throw SampleRankLossError(sigma_k_sampled);

    RrqrSelection stage2 = strong_rrqr_select(omega, config.f);

    // Map the selected sample positions back to original columns of a.
    std::vector<std::size_t> selected(k);
    for (std::size_t t = 0; t < k; ++t) selected[t] = sample.indices[stage2.selected[t]];
    std::sort(selected.begin(), selected.end());
    if (std::adjacent_find(selected.begin(), selected.end()) != selected.end()) {
        throw std::logic_error("two_stage_select: duplicate original columns selected");
    }

    DenseMatrix tail = factors.tail_scaled_vt(k);
    DenseMatrix tail_sampled = tail.empty() ? DenseMatrix() : apply_sample(tail, sample);

    CsspResult r;
    r.selected = std::move(selected);
    r.residual_fro = projection_residual(a, r.selected, Norm::frobenius);
    r.residual_spec = projection_residual(a, r.selected, Norm::spectral);
    r.baseline_fro = best_rank_k_residual(factors, k, Norm::frobenius);
    r.baseline_spec = best_rank_k_residual(factors, k, Norm::spectral);
    r.bound_factor_fro = frobenius_bound_factor(k, c);
    double root = std::sqrt(2.0 * static_cast<double>(k) * static_cast<double>(c - k) + 1.0);
    r.bound_spec_term1 = (1.0 + 2.0 * root) * r.baseline_spec;
    r.bound_spec_term2 = 8.0 * root / std::pow(static_cast<double>(c), 0.25) * r.baseline_fro;
    r.c_used = c;
    r.sigma_k_sampled = sigma_k_sampled;
    r.sigma_k_selected = stage2.sigma_k_out;
    r.seed_used = config.seed;
    r.tail_fro = tail_sampled.empty() ? 0.0 : frobenius_norm(tail_sampled);
    r.tail_spec = tail_sampled.empty() ? 0.0 : spectral_norm(tail_sampled);
    r.swaps = stage2.swaps;

    check_result(r, config.f);
    return r;
}

CsspResult boost(const DenseMatrix& a, const CsspConfig& config) {
    validate_config(config);
    SvdFactors factors = svd(a, config.rank_tol);

    bool have_best = false;
    CsspResult best;
    for (std::size_t t = 0; t < config.boost_trials; ++t) {
        CsspConfig trial = config;
        trial.seed = config.seed + t;
        try {
            CsspResult r = two_stage_select(a, factors, trial);
            double value = config.norm == Norm::frobenius ? r.residual_fro : r.residual_spec;
            double best_value =
                config.norm == Norm::frobenius ? best.residual_fro : best.residual_spec;
            if (!have_best || value < best_value) {
                best = std::move(r);
                have_best = true;
            }
        } catch (const SampleRankLossError&) {
            // later trials retry with fresh seeds
        }
    }
    if (!have_best) {
        throw AllTrialsFailedError("boost: all " + std::to_string(config.boost_trials) +
                                   " trials lost rank during sampling");
    }
    return best;
}

}  // namespace cssx
