#include <doctest.h>

#include "cssx/bench.hpp"
#include "cssx/generate.hpp"
#include "cssx/serialize.hpp"

using namespace cssx;

namespace {

CsspConfig bench_config(std::size_t k, std::size_t c, std::uint64_t seed) {
    CsspConfig cfg;
    cfg.k = k;
    cfg.c_mode = CMode::explicit_count(c);
    cfg.seed = seed;
    return cfg;
}

}  // namespace

TEST_SUITE("bench") {

TEST_CASE("per-trial records are identical across thread counts") {
    DenseMatrix a = gaussian_matrix(12, 10, 7);
    CsspConfig cfg = bench_config(2, 8, 5);
    auto serial = run_bounds_check(a, cfg, 24, 1);
    auto parallel = run_bounds_check(a, cfg, 24, 8);
    REQUIRE(serial.trials.size() == parallel.trials.size());
    for (std::size_t i = 0; i < serial.trials.size(); ++i) {
        const auto& s = serial.trials[i];
        const auto& p = parallel.trials[i];
        CHECK(s.seed == p.seed);
        CHECK(s.ok == p.ok);
        CHECK(s.result.selected == p.result.selected);
        CHECK(s.result.residual_fro == p.result.residual_fro);
        CHECK(s.result.sigma_k_sampled == p.result.sigma_k_sampled);
    }
    CHECK(serial.hold_fraction_fro == parallel.hold_fraction_fro);

    auto tail1 = run_tail_energy_check(a, cfg, 50, 1);
    auto tail4 = run_tail_energy_check(a, cfg, 50, 4);
    for (std::size_t i = 0; i < tail1.trials.size(); ++i)
        CHECK(tail1.trials[i].ratio == tail4.trials[i].ratio);
    CHECK(tail1.mean_ratio == tail4.mean_ratio);
}

TEST_CASE("bounds check aggregates match the records") {
    DenseMatrix a = gaussian_matrix(10, 8, 19);
    auto check = run_bounds_check(a, bench_config(2, 8, 3), 40, 2);
    std::size_t fro = 0;
    for (const auto& t : check.trials)
        if (t.ok && t.fro_bound_held) ++fro;
    CHECK(check.hold_fraction_fro == doctest::Approx(fro / 40.0));
    CHECK(check.structural_violations == 0);
    CHECK(check.chain_violations == 0);
}

TEST_CASE("oracle check surfaces the budget guard as a field") {
    DenseMatrix a = gaussian_matrix(5, 40, 11);
    CsspConfig cfg = bench_config(10, 20, 1);
    auto check = run_oracle_check(a, cfg, kDefaultSubsetBudget);
    CHECK(check.budget_exceeded);
    CHECK(!check.oracle.has_value());

    DenseMatrix b = gaussian_matrix(8, 8, 12);
    CsspConfig cfg2 = bench_config(2, 8, 1);
    cfg2.boost_trials = 5;
    auto ok = run_oracle_check(b, cfg2, kDefaultSubsetBudget);
    CHECK(!ok.budget_exceeded);
    REQUIRE(ok.oracle.has_value());
    REQUIRE(ok.algorithm.has_value());
    REQUIRE(ok.ratio.has_value());
    CHECK(*ok.ratio >= 1.0 - 1e-12);
}

TEST_CASE("report JSON carries every aggregate key") {
    DenseMatrix a = gaussian_matrix(10, 8, 23);
    MatrixDescriptor desc;
    desc.source = MatrixDescriptor::Source::gaussian;
    desc.rows = 10;
    desc.cols = 8;
    desc.seed = 23;
    BenchOptions options;
    options.bounds = true;
    options.tail_energy = true;
    options.trials = 10;
    options.threads = 2;
    auto report = run_bench(a, desc, bench_config(2, 8, 1), options);
    auto j = to_json(report);
    for (const char* key :
         {"matrix", "config", "trials", "checks", "lemma1_hold_fraction",
          "mean_tail_energy_ratio", "bound_hold_fraction_fro", "bound_hold_fraction_spec",
          "tail_spec_hold_fraction", "structural_violations", "chain_violations",
          "sample_rank_losses"}) {
        CHECK(j.contains(key));
    }
    CHECK(j["lemma1_hold_fraction"].is_null());  // check not requested
    CHECK(j["checks"]["lemma1"].is_null());
    CHECK(!j["mean_tail_energy_ratio"].is_null());
    CHECK(!j["bound_hold_fraction_fro"].is_null());
}

TEST_CASE("rank preservation check on an easy instance") {
    DenseMatrix a = gaussian_matrix(10, 8, 5);
    CsspConfig cfg;
    cfg.k = 1;
    cfg.c_mode = CMode::explicit_count(64);
    cfg.seed = 0;
    auto check = run_rank_preservation_check(a, cfg, 50, 4);
    CHECK(check.c == 64);
    CHECK(check.hold_fraction >= 0.9);
}

}  // TEST_SUITE
