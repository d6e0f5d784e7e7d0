// cssx: column subset selection toolkit command line.
// Subcommands: select | bench | oracle | probe. Reports are single JSON
// objects on stdout; diagnostics go to stderr. Exit codes: 0 success,
// 1 input/config error, 2 sampling rank loss (select), 3 budget exceeded
// (oracle).

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cssx/bench.hpp"
#include "cssx/cssp.hpp"
#include "cssx/errors.hpp"
#include "cssx/io.hpp"
#include "cssx/oracle.hpp"
#include "cssx/parallel.hpp"
#include "cssx/sampling.hpp"
#include "cssx/serialize.hpp"

namespace {

using nlohmann::ordered_json;

struct InputFlags {
    std::string path;
    std::string format = "csv";
};

struct ConfigFlags {
    std::size_t k = 1;
    std::size_t c = 0;  // 0: use c_mode
    std::string c_mode = "practical";
    double c0 = 1.0;
    double alpha = 4.0;
    double f = std::numbers::sqrt2;
    std::uint64_t seed = 0;
    std::size_t boost = 1;
    std::string prob = "hybrid";
    std::string norm = "fro";
    double rank_tol = 0.0;
    double residual_tol = 1e-12;
};

void add_input_flags(CLI::App* cmd, InputFlags& in) {
    cmd->add_option("--input", in.path, "matrix file")->required();
    cmd->add_option("--format", in.format, "input format")
        ->check(CLI::IsMember({"mm", "csv"}))
        ->capture_default_str();
}

void add_config_flags(CLI::App* cmd, ConfigFlags& cfg, bool with_boost = true) {
    cmd->add_option("--k", cfg.k, "number of columns to select")->required();
    auto* c_opt = cmd->add_option("--c", cfg.c, "explicit sample count");
    cmd->add_option("--c-mode", cfg.c_mode, "sample count policy")
        ->check(CLI::IsMember({"theoretical", "practical"}))
        ->excludes(c_opt)
        ->capture_default_str();
    cmd->add_option("--c0", cfg.c0, "theoretical-mode constant")->capture_default_str();
    cmd->add_option("--alpha", cfg.alpha, "practical-mode multiplier")->capture_default_str();
    cmd->add_option("--f", cfg.f, "interchange threshold")->capture_default_str();
    cmd->add_option("--seed", cfg.seed, "base seed")->capture_default_str();
    if (with_boost) cmd->add_option("--boost", cfg.boost, "trial count, best kept")->capture_default_str();
    cmd->add_option("--prob", cfg.prob, "sampling distribution")
        ->check(CLI::IsMember({"hybrid", "leverage"}))
        ->capture_default_str();
    cmd->add_option("--norm", cfg.norm, "reporting norm")
        ->check(CLI::IsMember({"fro", "spec"}))
        ->capture_default_str();
    cmd->add_option("--rank-tol", cfg.rank_tol, "relative rank tolerance (0: automatic)");
    cmd->add_option("--residual-tol", cfg.residual_tol, "hybrid fallback threshold");
}

cssx::CsspConfig build_config(const ConfigFlags& cfg) {
    cssx::CsspConfig config;
    config.k = cfg.k;
    if (cfg.c > 0) {
        config.c_mode = cssx::CMode::explicit_count(cfg.c);
    } else if (cfg.c_mode == "theoretical") {
        config.c_mode = cssx::CMode::theoretical(cfg.c0);
    } else {
        config.c_mode = cssx::CMode::practical(cfg.alpha);
    }
    config.f = cfg.f;
    config.seed = cfg.seed;
    config.prob_kind = cfg.prob == "hybrid" ? cssx::ProbKind::hybrid
                                            : cssx::ProbKind::leverage_only;
    config.rank_tol = cfg.rank_tol;
    config.residual_tol = cfg.residual_tol;
    config.boost_trials = cfg.boost;
    config.norm = cfg.norm == "fro" ? cssx::Norm::frobenius : cssx::Norm::spectral;
    return config;
}

cssx::DenseMatrix load(const InputFlags& in) {
    return cssx::read_matrix(in.path, in.format == "mm" ? cssx::MatrixFormat::matrix_market
                                                        : cssx::MatrixFormat::csv);
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

class Stopwatch {
public:
    double elapsed_ms() const {
        auto now = std::chrono::steady_clock::now();
        return std::chrono::duration<double, std::milli>(now - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::vector<std::size_t> parse_selection(const std::string& text) {
    std::vector<std::size_t> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string field =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (field.empty()) throw cssx::Error("empty index in --selection");
        std::size_t value = std::stoull(field);
        if (value == 0) throw cssx::Error("--selection indices are 1-based");
        out.push_back(value - 1);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

int run_select(const InputFlags& in, const ConfigFlags& cfg) {
    Stopwatch watch;
    cssx::DenseMatrix a = load(in);
    cssx::CsspConfig config = build_config(cfg);
    cssx::CsspResult result = cssx::boost(a, config);
    ordered_json j = cssx::to_json(result);
    j["elapsed_ms"] = watch.elapsed_ms();
    emit(j);
    return 0;
}

int run_probe(const InputFlags& in, const ConfigFlags& cfg) {
    cssx::DenseMatrix a = load(in);
    cssx::SvdFactors factors = cssx::svd(a, cfg.rank_tol);
    cssx::ProbabilityVector probs =
        cfg.prob == "hybrid"
            ? cssx::hybrid_probabilities(a, factors, cfg.k, cfg.residual_tol)
            : cssx::leverage_probabilities(factors, cfg.k);
    ordered_json j;
    j["kind"] = probs.kind == cssx::ProbKind::hybrid ? "hybrid" : "leverage_only";
    j["k"] = cfg.k;
    j["n"] = a.cols();
    j["p"] = probs.p;
    emit(j);
    return 0;
}

int run_oracle(const InputFlags& in, const ConfigFlags& cfg, std::size_t budget,
               const std::string& selection) {
    Stopwatch watch;
    cssx::DenseMatrix a = load(in);
    cssx::Norm norm = cfg.norm == "fro" ? cssx::Norm::frobenius : cssx::Norm::spectral;
    cssx::OracleResult best = cssx::exhaustive_best(a, cfg.k, norm, budget);

    ordered_json j;
    ordered_json selected = ordered_json::array();
    for (std::size_t i : best.selected) selected.push_back(i + 1);
    j["selected"] = std::move(selected);
    j["norm"] = cfg.norm;
    j["residual_fro"] =
        norm == cssx::Norm::frobenius ? ordered_json(best.residual) : ordered_json(nullptr);
    j["residual_spec"] =
        norm == cssx::Norm::spectral ? ordered_json(best.residual) : ordered_json(nullptr);
    j["evaluated"] = best.evaluated;
    if (selection.empty()) {
        j["supplied_selection"] = nullptr;
        j["supplied_residual"] = nullptr;
        j["ratio"] = nullptr;
    } else {
        std::vector<std::size_t> supplied = parse_selection(selection);
        double residual = cssx::projection_residual(a, supplied, norm);
        ordered_json sj = ordered_json::array();
        for (std::size_t i : supplied) sj.push_back(i + 1);
        j["supplied_selection"] = std::move(sj);
        j["supplied_residual"] = residual;
        j["ratio"] = best.residual > 0.0 ? ordered_json(residual / best.residual)
                                         : ordered_json(nullptr);
    }
    j["elapsed_ms"] = watch.elapsed_ms();
    emit(j);
    return 0;
}

struct GenFlags {
    std::string kind;  // gaussian | lowrank
    std::size_t rows = 0, cols = 0, rank = 1;
    double noise = 0.0;
    std::uint64_t seed = 0;
};

int run_bench(const InputFlags& in, bool have_input, const GenFlags& gen, const ConfigFlags& cfg,
              const std::string& checks_csv, std::size_t trials, std::size_t budget) {
    Stopwatch watch;
    cssx::MatrixDescriptor desc;
    cssx::DenseMatrix a;
    if (have_input) {
        desc.source = cssx::MatrixDescriptor::Source::file;
        desc.path = in.path;
        desc.format = in.format;
        a = load(in);
    } else if (gen.kind == "gaussian") {
        desc.source = cssx::MatrixDescriptor::Source::gaussian;
        desc.rows = gen.rows;
        desc.cols = gen.cols;
        desc.seed = gen.seed;
        a = cssx::materialize(desc);
    } else if (gen.kind == "lowrank") {
        desc.source = cssx::MatrixDescriptor::Source::low_rank_noise;
        desc.rows = gen.rows;
        desc.cols = gen.cols;
        desc.rank = gen.rank;
        desc.noise = gen.noise;
        desc.seed = gen.seed;
        a = cssx::materialize(desc);
    } else {
        throw cssx::Error("bench needs --input or --gen gaussian|lowrank");
    }
    desc.rows = a.rows();
    desc.cols = a.cols();

    cssx::BenchOptions options;
    options.trials = trials;
    options.threads = cssx::default_thread_count();
    options.oracle_budget = budget;
    std::size_t start = 0;
    while (start <= checks_csv.size()) {
        std::size_t comma = checks_csv.find(',', start);
        std::string name = checks_csv.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        if (name == "lemma1") options.lemma1 = true;
        else if (name == "tail_energy") options.tail_energy = true;
        else if (name == "bounds") options.bounds = true;
        else if (name == "oracle") options.oracle = true;
        else if (!name.empty()) throw cssx::Error("unknown check '" + name + "'");
        if (comma == std::string::npos) break;
        start = comma + 1;
    }

    cssx::CsspConfig config = build_config(cfg);
    cssx::ExperimentReport report = cssx::run_bench(a, desc, config, options);
    ordered_json j = cssx::to_json(report);
    j["elapsed_ms"] = watch.elapsed_ms();
    emit(j);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"column subset selection toolkit"};
    app.require_subcommand(1);

    InputFlags select_in, probe_in, oracle_in, bench_in;
    ConfigFlags select_cfg, probe_cfg, oracle_cfg, bench_cfg;
    GenFlags gen;
    std::string checks = "bounds";
    std::string selection;
    std::size_t trials = 100;
    std::size_t budget = cssx::kDefaultSubsetBudget;

    CLI::App* select = app.add_subcommand("select", "run the two-stage selection");
    add_input_flags(select, select_in);
    add_config_flags(select, select_cfg);

    CLI::App* bench = app.add_subcommand("bench", "trial loops for the statistical checks");
    auto* bench_input = bench->add_option("--input", bench_in.path, "matrix file");
    bench->add_option("--format", bench_in.format, "input format")
        ->check(CLI::IsMember({"mm", "csv"}))
        ->capture_default_str();
    bench->add_option("--gen", gen.kind, "generator")->check(CLI::IsMember({"gaussian", "lowrank"}))
        ->excludes(bench_input);
    bench->add_option("--rows", gen.rows, "generated rows");
    bench->add_option("--cols", gen.cols, "generated cols");
    bench->add_option("--rank", gen.rank, "generator rank (lowrank)");
    bench->add_option("--noise", gen.noise, "generator noise level (lowrank)");
    bench->add_option("--gen-seed", gen.seed, "generator seed");
    add_config_flags(bench, bench_cfg);
    bench->add_option("--trials", trials, "trial count")->capture_default_str();
    bench->add_option("--checks", checks, "comma list: lemma1,tail_energy,bounds,oracle")
        ->capture_default_str();
    bench->add_option("--budget", budget, "oracle subset budget")->capture_default_str();

    CLI::App* oracle = app.add_subcommand("oracle", "exhaustive best subset");
    add_input_flags(oracle, oracle_in);
    add_config_flags(oracle, oracle_cfg, /*with_boost=*/false);
    oracle->add_option("--budget", budget, "subset budget")->capture_default_str();
    oracle->add_option("--selection", selection, "1-based indices to compare, e.g. 2,5,7");

    CLI::App* probe = app.add_subcommand("probe", "print the sampling distribution");
    add_input_flags(probe, probe_in);
    add_config_flags(probe, probe_cfg, /*with_boost=*/false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (select->parsed()) return run_select(select_in, select_cfg);
        if (bench->parsed())
            return run_bench(bench_in, bench_input->count() > 0, gen, bench_cfg, checks, trials,
                             budget);
        if (oracle->parsed()) return run_oracle(oracle_in, oracle_cfg, budget, selection);
        if (probe->parsed()) return run_probe(probe_in, probe_cfg);
    } catch (const cssx::SampleRankLossError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cssx::AllTrialsFailedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cssx::BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
