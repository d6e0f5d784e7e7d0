#include "cssx/serialize.hpp"

namespace cssx {

namespace {

using nlohmann::ordered_json;

ordered_json one_based(const std::vector<std::size_t>& indices) {
    ordered_json arr = ordered_json::array();
    for (std::size_t i : indices) arr.push_back(i + 1);
    return arr;
}

const char* norm_name(Norm n) { return n == Norm::frobenius ? "fro" : "spec"; }

ordered_json oracle_json(const OracleResult& r, Norm norm) {
    ordered_json j;
    j["selected"] = one_based(r.selected);
    j["norm"] = norm_name(norm);
    j["residual_fro"] = norm == Norm::frobenius ? ordered_json(r.residual) : ordered_json(nullptr);
    j["residual_spec"] = norm == Norm::spectral ? ordered_json(r.residual) : ordered_json(nullptr);
    j["evaluated"] = r.evaluated;
    return j;
}

}  // namespace

ordered_json to_json(const CsspResult& r) {
    ordered_json j;
    j["selected"] = one_based(r.selected);
    j["residual_fro"] = r.residual_fro;
    j["residual_spec"] = r.residual_spec;
    j["baseline_fro"] = r.baseline_fro;
    j["baseline_spec"] = r.baseline_spec;
    j["bound_factor_fro"] = r.bound_factor_fro;
    j["bound_spec_term1"] = r.bound_spec_term1;
    j["bound_spec_term2"] = r.bound_spec_term2;
    j["c_used"] = r.c_used;
    j["sigma_k_sampled"] = r.sigma_k_sampled;
    j["sigma_k_selected"] = r.sigma_k_selected;
    j["seed_used"] = r.seed_used;
    j["tail_fro"] = r.tail_fro;
    j["tail_spec"] = r.tail_spec;
    j["swaps"] = r.swaps;
    return j;
}

ordered_json to_json(const MatrixDescriptor& d) {
    ordered_json j;
    switch (d.source) {
        case MatrixDescriptor::Source::file:
            j["source"] = "file";
            break;
        case MatrixDescriptor::Source::gaussian:
            j["source"] = "gaussian";
            break;
        case MatrixDescriptor::Source::low_rank_noise:
            j["source"] = "low_rank_noise";
            break;
    }
    j["path"] = d.path.empty() ? ordered_json(nullptr) : ordered_json(d.path);
    j["format"] = d.format.empty() ? ordered_json(nullptr) : ordered_json(d.format);
    j["rows"] = d.rows;
    j["cols"] = d.cols;
    j["rank"] = d.source == MatrixDescriptor::Source::low_rank_noise ? ordered_json(d.rank)
                                                                     : ordered_json(nullptr);
    j["noise"] = d.source == MatrixDescriptor::Source::low_rank_noise ? ordered_json(d.noise)
                                                                      : ordered_json(nullptr);
    j["seed"] = d.source == MatrixDescriptor::Source::file ? ordered_json(nullptr)
                                                           : ordered_json(d.seed);
    return j;
}

ordered_json to_json(const CsspConfig& c) {
    ordered_json j;
    j["k"] = c.k;
    switch (c.c_mode.kind) {
        case CMode::Kind::theoretical:
            j["c_mode"] = "theoretical";
            break;
        case CMode::Kind::practical:
            j["c_mode"] = "practical";
            break;
        case CMode::Kind::explicit_count:
            j["c_mode"] = "explicit";
            break;
    }
    j["c0"] = c.c_mode.c0;
    j["alpha"] = c.c_mode.alpha;
    j["c"] = c.c_mode.kind == CMode::Kind::explicit_count ? ordered_json(c.c_mode.count)
                                                          : ordered_json(nullptr);
    j["f"] = c.f;
    j["seed"] = c.seed;
    j["prob"] = c.prob_kind == ProbKind::hybrid ? "hybrid" : "leverage";
    j["rank_tol"] = c.rank_tol;
    j["residual_tol"] = c.residual_tol;
    j["boost"] = c.boost_trials;
    j["norm"] = norm_name(c.norm);
    return j;
}

ordered_json to_json(const ExperimentReport& report) {
    ordered_json j;
    j["matrix"] = to_json(report.matrix);
    j["config"] = to_json(report.config);
    j["trials"] = report.options.trials;

    ordered_json checks;
    if (report.rank_preservation) {
        const auto& c = *report.rank_preservation;
        ordered_json cj;
        cj["c"] = c.c;
        cj["threshold"] = c.threshold;
        cj["hold_fraction"] = c.hold_fraction;
        ordered_json trials = ordered_json::array();
        for (const auto& t : c.trials) {
            trials.push_back({{"seed", t.seed}, {"sigma_k_sampled", t.sigma_k_sampled},
                              {"held", t.held}});
        }
        cj["trials"] = std::move(trials);
        checks["lemma1"] = std::move(cj);
    } else {
        checks["lemma1"] = nullptr;
    }
    if (report.tail_energy) {
        const auto& c = *report.tail_energy;
        ordered_json cj;
        cj["c"] = c.c;
        cj["mean_ratio"] = c.mean_ratio;
        ordered_json trials = ordered_json::array();
        for (const auto& t : c.trials) trials.push_back({{"seed", t.seed}, {"ratio", t.ratio}});
        cj["trials"] = std::move(trials);
        checks["tail_energy"] = std::move(cj);
    } else {
        checks["tail_energy"] = nullptr;
    }
    if (report.bounds) {
        const auto& c = *report.bounds;
        ordered_json cj;
        cj["hold_fraction_fro"] = c.hold_fraction_fro;
        cj["hold_fraction_spec"] = c.hold_fraction_spec;
        cj["tail_spec_hold_fraction"] = c.tail_spec_hold_fraction;
        cj["structural_violations"] = c.structural_violations;
        cj["chain_violations"] = c.chain_violations;
        cj["sample_rank_losses"] = c.sample_rank_losses;
        ordered_json trials = ordered_json::array();
        for (const auto& t : c.trials) {
            ordered_json tj;
            tj["seed"] = t.seed;
            tj["ok"] = t.ok;
            tj["fro_bound_held"] = t.fro_bound_held;
            tj["spec_bound_held"] = t.spec_bound_held;
            tj["tail_spec_held"] = t.tail_spec_held;
            tj["structural_ok"] = t.structural_ok;
            tj["chain_ok"] = t.chain_ok;
            tj["result"] = t.ok ? to_json(t.result) : ordered_json(nullptr);
            trials.push_back(std::move(tj));
        }
        cj["trials"] = std::move(trials);
        checks["bounds"] = std::move(cj);
    } else {
        checks["bounds"] = nullptr;
    }
    if (report.oracle) {
        const auto& c = *report.oracle;
        ordered_json cj;
        cj["budget_exceeded"] = c.budget_exceeded;
        cj["oracle"] = c.oracle ? oracle_json(*c.oracle, report.config.norm)
                                : ordered_json(nullptr);
        cj["algorithm"] = c.algorithm ? to_json(*c.algorithm) : ordered_json(nullptr);
        cj["ratio"] = c.ratio ? ordered_json(*c.ratio) : ordered_json(nullptr);
        checks["oracle"] = std::move(cj);
    } else {
        checks["oracle"] = nullptr;
    }
    j["checks"] = std::move(checks);

    j["lemma1_hold_fraction"] = report.rank_preservation
                                    ? ordered_json(report.rank_preservation->hold_fraction)
                                    : ordered_json(nullptr);
    j["mean_tail_energy_ratio"] =
        report.tail_energy ? ordered_json(report.tail_energy->mean_ratio) : ordered_json(nullptr);
    j["bound_hold_fraction_fro"] =
        report.bounds ? ordered_json(report.bounds->hold_fraction_fro) : ordered_json(nullptr);
    j["bound_hold_fraction_spec"] =
        report.bounds ? ordered_json(report.bounds->hold_fraction_spec) : ordered_json(nullptr);
    j["tail_spec_hold_fraction"] = report.bounds
                                       ? ordered_json(report.bounds->tail_spec_hold_fraction)
                                       : ordered_json(nullptr);
    j["structural_violations"] =
        report.bounds ? ordered_json(report.bounds->structural_violations) : ordered_json(nullptr);
    j["chain_violations"] =
        report.bounds ? ordered_json(report.bounds->chain_violations) : ordered_json(nullptr);
    j["sample_rank_losses"] =
        report.bounds ? ordered_json(report.bounds->sample_rank_losses) : ordered_json(nullptr);
    return j;
}

}  // namespace cssx
