// Python bindings for the column subset selection toolkit. Matrices cross
// the boundary as 2-D float64 numpy arrays (copied); indices are 0-based on
// the python side.

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstring>

#include "cssx/bench.hpp"
#include "cssx/cssp.hpp"
#include "cssx/errors.hpp"
#include "cssx/generate.hpp"
#include "cssx/io.hpp"
#include "cssx/linalg.hpp"
#include "cssx/oracle.hpp"
#include "cssx/rrqr.hpp"
#include "cssx/sampling.hpp"

namespace py = pybind11;

namespace {

cssx::DenseMatrix to_matrix(const py::array_t<double, py::array::c_style | py::array::forcecast>& arr) {
    if (arr.ndim() != 2) throw std::invalid_argument("expected a 2-D array");
    std::size_t rows = static_cast<std::size_t>(arr.shape(0));
    std::size_t cols = static_cast<std::size_t>(arr.shape(1));
    std::vector<double> entries(rows * cols);
    std::memcpy(entries.data(), arr.data(), entries.size() * sizeof(double));
    return cssx::DenseMatrix(rows, cols, std::move(entries));
}

py::array_t<double> to_array(const cssx::DenseMatrix& m) {
    py::array_t<double> arr({m.rows(), m.cols()});
    std::memcpy(arr.mutable_data(), m.entries().data(), m.entries().size() * sizeof(double));
    return arr;
}

cssx::Norm parse_norm(const std::string& name) {
    if (name == "fro") return cssx::Norm::frobenius;
    if (name == "spec") return cssx::Norm::spectral;
    throw std::invalid_argument("norm must be 'fro' or 'spec'");
}

cssx::CsspConfig make_config(std::size_t k, std::size_t c, const std::string& c_mode, double c0,
                             double alpha, double f, std::uint64_t seed, const std::string& prob,
                             std::size_t boost_trials, const std::string& norm, double rank_tol,
                             double residual_tol) {
    cssx::CsspConfig config;
    config.k = k;
    if (c > 0) {
        config.c_mode = cssx::CMode::explicit_count(c);
    } else if (c_mode == "theoretical") {
        config.c_mode = cssx::CMode::theoretical(c0);
    } else if (c_mode == "practical") {
        config.c_mode = cssx::CMode::practical(alpha);
    } else {
        throw std::invalid_argument("c_mode must be 'theoretical' or 'practical'");
    }
    config.f = f;
    config.seed = seed;
    if (prob == "hybrid") config.prob_kind = cssx::ProbKind::hybrid;
    else if (prob == "leverage") config.prob_kind = cssx::ProbKind::leverage_only;
    else throw std::invalid_argument("prob must be 'hybrid' or 'leverage'");
    config.boost_trials = boost_trials;
    config.norm = parse_norm(norm);
    config.rank_tol = rank_tol;
    config.residual_tol = residual_tol;
    return config;
}

constexpr const char* kConfigArgsDoc =
    "k: columns to select. c: explicit sample count (0 uses c_mode with c0 "
    "or alpha). f: interchange threshold. prob: 'hybrid' or 'leverage'. "
    "norm: 'fro' or 'spec'.";

}  // namespace

PYBIND11_MODULE(_cssx, m) {
    m.doc() = "column subset selection via randomized sampling and strong "
              "rank-revealing QR";

    py::register_exception<cssx::ZeroMatrixError>(m, "ZeroMatrixError");
    py::register_exception<cssx::RankDeficientError>(m, "RankDeficientError");
    py::register_exception<cssx::InvalidSelectionError>(m, "InvalidSelectionError");
    py::register_exception<cssx::SampleRankLossError>(m, "SampleRankLossError");
    py::register_exception<cssx::NonTerminationError>(m, "NonTerminationError");
    py::register_exception<cssx::AllTrialsFailedError>(m, "AllTrialsFailedError");
    py::register_exception<cssx::BudgetExceededError>(m, "BudgetExceededError");
    py::register_exception<cssx::ParseError>(m, "MatrixParseError");
    py::register_exception<cssx::NonFiniteError>(m, "NonFiniteError");

    py::class_<cssx::SvdFactors>(m, "SvdFactors")
        .def_property_readonly("u", [](const cssx::SvdFactors& f) { return to_array(f.u); })
        .def_property_readonly("sigma",
                               [](const cssx::SvdFactors& f) { return py::cast(f.sigma); })
        .def_property_readonly("v", [](const cssx::SvdFactors& f) { return to_array(f.v); })
        .def_readonly("rank", &cssx::SvdFactors::rank)
        .def("__repr__", [](const cssx::SvdFactors& f) {
            return "SvdFactors(rank=" + std::to_string(f.rank) + ")";
        });

    py::class_<cssx::ColumnSample>(m, "ColumnSample")
        .def_readonly("c", &cssx::ColumnSample::c)
        .def_readonly("indices", &cssx::ColumnSample::indices)
        .def_readonly("scales", &cssx::ColumnSample::scales);

    py::class_<cssx::RrqrSelection>(m, "RrqrSelection")
        .def_readonly("selected", &cssx::RrqrSelection::selected)
        .def_readonly("sigma_k_in", &cssx::RrqrSelection::sigma_k_in)
        .def_readonly("sigma_k_out", &cssx::RrqrSelection::sigma_k_out)
        .def_readonly("swaps", &cssx::RrqrSelection::swaps);

    py::class_<cssx::CsspResult>(m, "CsspResult")
        .def_readonly("selected", &cssx::CsspResult::selected)
        .def_readonly("residual_fro", &cssx::CsspResult::residual_fro)
        .def_readonly("residual_spec", &cssx::CsspResult::residual_spec)
        .def_readonly("baseline_fro", &cssx::CsspResult::baseline_fro)
        .def_readonly("baseline_spec", &cssx::CsspResult::baseline_spec)
        .def_readonly("bound_factor_fro", &cssx::CsspResult::bound_factor_fro)
        .def_readonly("bound_spec_term1", &cssx::CsspResult::bound_spec_term1)
        .def_readonly("bound_spec_term2", &cssx::CsspResult::bound_spec_term2)
        .def_readonly("c_used", &cssx::CsspResult::c_used)
        .def_readonly("sigma_k_sampled", &cssx::CsspResult::sigma_k_sampled)
        .def_readonly("sigma_k_selected", &cssx::CsspResult::sigma_k_selected)
        .def_readonly("seed_used", &cssx::CsspResult::seed_used)
        .def_readonly("tail_fro", &cssx::CsspResult::tail_fro)
        .def_readonly("tail_spec", &cssx::CsspResult::tail_spec)
        .def_readonly("swaps", &cssx::CsspResult::swaps)
        .def("__repr__", [](const cssx::CsspResult& r) {
            std::string s = "CsspResult(selected=[";
            for (std::size_t i = 0; i < r.selected.size(); ++i)
                s += (i ? ", " : "") + std::to_string(r.selected[i]);
            return s + "], residual_fro=" + std::to_string(r.residual_fro) + ")";
        });

    py::class_<cssx::OracleResult>(m, "OracleResult")
        .def_readonly("selected", &cssx::OracleResult::selected)
        .def_readonly("residual", &cssx::OracleResult::residual)
        .def_readonly("evaluated", &cssx::OracleResult::evaluated);

    m.def(
        "svd",
        [](py::array_t<double, py::array::c_style | py::array::forcecast> a, double rank_tol) {
            return cssx::svd(to_matrix(a), rank_tol);
        },
        py::arg("a"), py::arg("rank_tol") = 0.0,
        "Thin SVD truncated at the numerical rank.");
    m.def(
        "singular_values",
        [](py::array_t<double, py::array::c_style | py::array::forcecast> a) {
            return cssx::singular_values(to_matrix(a));
        },
        py::arg("a"));
    m.def(
        "spectral_norm",
        [](py::array_t<double, py::array::c_style | py::array::forcecast> a) {
            return cssx::spectral_norm(to_matrix(a));
        },
        py::arg("a"));
    m.def(
        "frobenius_norm",
        [](py::array_t<double, py::array::c_style | py::array::forcecast> a) {
            return cssx::frobenius_norm(to_matrix(a));
        },
        py::arg("a"));
    m.def(
        "pseudoinverse",
        [](py::array_t<double, py::array::c_style | py::array::forcecast> a, double rank_tol) {
            return to_array(cssx::pseudoinverse(to_matrix(a), rank_tol));
        },
        py::arg("a"), py::arg("rank_tol") = 0.0);
    m.def(
        "projection_residual",
        [](py::array_t<double, py::array::c_style | py::array::forcecast> a,
           const std::vector<std::size_t>& indices, const std::string& norm) {
            return cssx::projection_residual(to_matrix(a), indices, parse_norm(norm));
        },
        py::arg("a"), py::arg("indices"), py::arg("norm") = "fro",
        "||a - C C^+ a|| for the 0-based selected columns.");
    m.def(
        "best_rank_k_residual",
        [](const cssx::SvdFactors& f, std::size_t k, const std::string& norm) {
            return cssx::best_rank_k_residual(f, k, parse_norm(norm));
        },
        py::arg("factors"), py::arg("k"), py::arg("norm") = "fro");

    m.def(
        "leverage_probabilities",
        [](py::array_t<double, py::array::c_style | py::array::forcecast> a, std::size_t k) {
            cssx::DenseMatrix mat = to_matrix(a);
            return cssx::leverage_probabilities(cssx::svd(mat), k).p;
        },
        py::arg("a"), py::arg("k"), "Leverage-score distribution over columns.");
    m.def(
        "hybrid_probabilities",
        [](py::array_t<double, py::array::c_style | py::array::forcecast> a, std::size_t k,
           double residual_tol) {
            cssx::DenseMatrix mat = to_matrix(a);
            cssx::ProbabilityVector p =
                cssx::hybrid_probabilities(mat, cssx::svd(mat), k, residual_tol);
            return py::make_tuple(p.p,
                                  p.kind == cssx::ProbKind::hybrid ? "hybrid" : "leverage_only");
        },
        py::arg("a"), py::arg("k"), py::arg("residual_tol") = 1e-12,
        "Returns (p, kind); kind records a leverage-only fallback.");
    m.def(
        "choose_c",
        [](std::size_t k, const std::string& mode, double c0, double alpha, std::size_t c) {
            if (mode == "theoretical") return cssx::choose_c(k, cssx::CMode::theoretical(c0));
            if (mode == "practical") return cssx::choose_c(k, cssx::CMode::practical(alpha));
            if (mode == "explicit") return cssx::choose_c(k, cssx::CMode::explicit_count(c));
            throw std::invalid_argument("mode must be theoretical|practical|explicit");
        },
        py::arg("k"), py::arg("mode") = "practical", py::arg("c0") = 1.0, py::arg("alpha") = 4.0,
        py::arg("c") = 0);
    m.def(
        "sample_exactly_c",
        [](const std::vector<double>& p, std::size_t c, std::uint64_t seed) {
            cssx::ProbabilityVector probs;
            probs.p = p;
            probs.kind = cssx::ProbKind::hybrid;
            return cssx::sample_exactly_c(probs, c, seed);
        },
        py::arg("p"), py::arg("c"), py::arg("seed") = 0,
        "c i.i.d. with-replacement draws with 1/sqrt(c p_i) rescale factors.");
    m.def(
        "apply_sample",
        [](py::array_t<double, py::array::c_style | py::array::forcecast> a,
           const cssx::ColumnSample& sample) {
            return to_array(cssx::apply_sample(to_matrix(a), sample));
        },
        py::arg("a"), py::arg("sample"));

    m.def(
        "strong_rrqr_select",
        [](py::array_t<double, py::array::c_style | py::array::forcecast> a, double f,
           std::size_t max_swaps) {
            return cssx::strong_rrqr_select(to_matrix(a), f, max_swaps);
        },
        py::arg("a"), py::arg("f") = std::numbers::sqrt2, py::arg("max_swaps") = 0,
        "Select k of c columns of a k x c matrix under the sigma_k guarantee.");

    m.def(
        "two_stage_select",
        [](py::array_t<double, py::array::c_style | py::array::forcecast> a, std::size_t k,
           std::size_t c, const std::string& c_mode, double c0, double alpha, double f,
           std::uint64_t seed, const std::string& prob, const std::string& norm, double rank_tol,
           double residual_tol) {
            return cssx::two_stage_select(
                to_matrix(a), make_config(k, c, c_mode, c0, alpha, f, seed, prob, 1, norm,
                                          rank_tol, residual_tol));
        },
        py::arg("a"), py::arg("k"), py::arg("c") = 0, py::arg("c_mode") = "practical",
        py::arg("c0") = 1.0, py::arg("alpha") = 4.0, py::arg("f") = std::numbers::sqrt2,
        py::arg("seed") = 0, py::arg("prob") = "hybrid", py::arg("norm") = "fro",
        py::arg("rank_tol") = 0.0, py::arg("residual_tol") = 1e-12, kConfigArgsDoc);
    m.def(
        "boost",
        [](py::array_t<double, py::array::c_style | py::array::forcecast> a, std::size_t k,
           std::size_t trials, std::size_t c, const std::string& c_mode, double c0, double alpha,
           double f, std::uint64_t seed, const std::string& prob, const std::string& norm,
           double rank_tol, double residual_tol) {
            return cssx::boost(to_matrix(a),
                               make_config(k, c, c_mode, c0, alpha, f, seed, prob, trials, norm,
                                           rank_tol, residual_tol));
        },
        py::arg("a"), py::arg("k"), py::arg("trials") = 1, py::arg("c") = 0,
        py::arg("c_mode") = "practical", py::arg("c0") = 1.0, py::arg("alpha") = 4.0,
        py::arg("f") = std::numbers::sqrt2, py::arg("seed") = 0, py::arg("prob") = "hybrid",
        py::arg("norm") = "fro", py::arg("rank_tol") = 0.0, py::arg("residual_tol") = 1e-12,
        "Best of `trials` seeded runs, skipping sampling rank losses.");

    m.def(
        "exhaustive_best",
        [](py::array_t<double, py::array::c_style | py::array::forcecast> a, std::size_t k,
           const std::string& norm, std::size_t budget) {
            return cssx::exhaustive_best(to_matrix(a), k, parse_norm(norm), budget);
        },
        py::arg("a"), py::arg("k"), py::arg("norm") = "fro",
        py::arg("budget") = cssx::kDefaultSubsetBudget);
    m.def(
        "uniform_baseline",
        [](py::array_t<double, py::array::c_style | py::array::forcecast> a, std::size_t k,
           std::size_t trials, std::uint64_t seed, const std::string& norm) {
            return cssx::uniform_baseline(to_matrix(a), k, trials, seed, parse_norm(norm));
        },
        py::arg("a"), py::arg("k"), py::arg("trials"), py::arg("seed") = 0,
        py::arg("norm") = "fro");
    m.def(
        "pivoted_qr_baseline",
        [](py::array_t<double, py::array::c_style | py::array::forcecast> a, std::size_t k,
           const std::string& norm) {
            return cssx::pivoted_qr_baseline(to_matrix(a), k, parse_norm(norm));
        },
        py::arg("a"), py::arg("k"), py::arg("norm") = "fro");

    m.def("frobenius_bound_factor", &cssx::frobenius_bound_factor, py::arg("k"), py::arg("c"));
    m.def("spectral_bound", &cssx::spectral_bound, py::arg("k"), py::arg("c"),
          py::arg("baseline_spec"), py::arg("baseline_fro"));

    m.def(
        "read_matrix",
        [](const std::string& path, const std::string& format) {
            return to_array(cssx::read_matrix(path, format == "mm"
                                                        ? cssx::MatrixFormat::matrix_market
                                                        : cssx::MatrixFormat::csv));
        },
        py::arg("path"), py::arg("format") = "csv",
        "Read a Matrix Market ('mm') or headerless CSV file.");
    m.def(
        "gaussian_matrix",
        [](std::size_t rows, std::size_t cols, std::uint64_t seed) {
            return to_array(cssx::gaussian_matrix(rows, cols, seed));
        },
        py::arg("rows"), py::arg("cols"), py::arg("seed") = 0);
    m.def(
        "low_rank_plus_noise",
        [](std::size_t rows, std::size_t cols, std::size_t rank, double noise,
           std::uint64_t seed) {
            return to_array(cssx::low_rank_plus_noise(rows, cols, rank, noise, seed));
        },
        py::arg("rows"), py::arg("cols"), py::arg("rank"), py::arg("noise") = 0.0,
        py::arg("seed") = 0);
}
