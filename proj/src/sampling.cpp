#include "cssx/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "cssx/errors.hpp"
#include "cssx/rng.hpp"

namespace cssx {

CMode CMode::theoretical(double c0) {
    if (c0 < 1.0) throw std::invalid_argument("CMode: c0 must be >= 1");
    CMode m;
    m.kind = Kind::theoretical;
    m.c0 = c0;
    return m;
}

CMode CMode::practical(double alpha) {
    if (alpha <= 0.0) throw std::invalid_argument("CMode: alpha must be positive");
    CMode m;
    m.kind = Kind::practical;
    m.alpha = alpha;
    return m;
}

CMode CMode::explicit_count(std::size_t c) {
    if (c == 0) throw std::invalid_argument("CMode: explicit c must be positive");
    CMode m;
    m.kind = Kind::explicit_count;
    m.count = c;
    return m;
}

namespace {

void require_k_within_rank(const SvdFactors& f, std::size_t k) {
    if (k == 0) throw std::invalid_argument("k must be positive");
    if (k > f.rank) {
        throw RankDeficientError("k = " + std::to_string(k) + " exceeds numerical rank " +
                                 std::to_string(f.rank));
    }
}

}  // namespace

ProbabilityVector leverage_probabilities(const SvdFactors& f, std::size_t k) {
    require_k_within_rank(f, k);
    const std::size_t n = f.v.rows();
    ProbabilityVector out;
    out.kind = ProbKind::leverage_only;
    out.p.resize(n);
    // sum of leverage row norms is ||V_k||_F^2 = k exactly
    for (std::size_t i = 0; i < n; ++i)
        out.p[i] = f.leverage_row_norm_squared(i, k) / static_cast<double>(k);
    return out;
}

ProbabilityVector hybrid_probabilities(const DenseMatrix& a, const SvdFactors& f, std::size_t k,
                                       double residual_tol) {
    require_k_within_rank(f, k);
    const std::size_t n = a.cols();
    if (f.v.rows() != n) throw std::invalid_argument("hybrid_probabilities: factor shape mismatch");

    // Residual energy of column i: ||a^(i)||^2 - ||(a V_k V_k^T)^(i)||^2,
    // the second term being sum_{l<k} sigma_l^2 v_{il}^2. Tiny negative
    // differences from rounding are clamped to zero.
    std::vector<double> residual_energy(n);
    double total_energy = 0.0;
    double total_sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double col_sq = column_norm_squared(a, i);
        double top_sq = 0.0;
        for (std::size_t l = 0; l < k; ++l) {
            double sv = f.sigma[l] * f.v(i, l);
            top_sq += sv * sv;
        }
        residual_energy[i] = std::max(0.0, col_sq - top_sq);
        total_energy += residual_energy[i];
        total_sq += col_sq;
    }

    if (total_energy <= residual_tol * total_sq) return leverage_probabilities(f, k);

    ProbabilityVector out;
    out.kind = ProbKind::hybrid;
    out.p.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.p[i] = f.leverage_row_norm_squared(i, k) / (2.0 * static_cast<double>(k)) +
                   residual_energy[i] / (2.0 * total_energy);
    }
    return out;
}

std::size_t choose_c(std::size_t k, const CMode& mode) {
    if (k == 0) throw std::invalid_argument("choose_c: k must be positive");
    std::size_t c = 0;
    switch (mode.kind) {
        case CMode::Kind::theoretical: {
            double kk = static_cast<double>(k);
            double scale = 1600.0 * mode.c0 * mode.c0 * kk;
            c = static_cast<std::size_t>(std::ceil(scale * std::log(800.0 * mode.c0 * mode.c0 * kk)));
            break;
        }
        case CMode::Kind::practical: {
            double kk = static_cast<double>(k);
            double v = std::ceil(mode.alpha * kk * std::log(kk + 2.0));
            c = std::max<std::size_t>(2 * k, static_cast<std::size_t>(v));
            break;
        }
        case CMode::Kind::explicit_count:
            if (mode.count < k) {
                throw std::invalid_argument("choose_c: explicit c = " + std::to_string(mode.count) +
                                            " is below k = " + std::to_string(k));
            }
            c = mode.count;
            break;
    }
    return std::max(c, k);
}

ColumnSample sample_exactly_c(const ProbabilityVector& probs, std::size_t c, std::uint64_t seed) {
    if (c == 0) throw std::invalid_argument("sample_exactly_c: c must be positive");
    const std::size_t n = probs.p.size();
    if (n == 0) throw std::invalid_argument("sample_exactly_c: empty distribution");

    std::vector<double> cumulative(n);
    double acc = 0.0;
    std::size_t last_positive = n;
    for (std::size_t i = 0; i < n; ++i) {
        acc += probs.p[i];
        cumulative[i] = acc;
        if (probs.p[i] > 0.0) last_positive = i;
    }
    if (last_positive == n) throw std::invalid_argument("sample_exactly_c: all-zero distribution");

    ColumnSample sample;
    sample.c = c;
    sample.indices.resize(c);
    sample.scales.resize(c);
    std::mt19937_64 gen(seed);
    for (std::size_t t = 0; t < c; ++t) {
        double u = unit_uniform(gen);
        auto it = std::lower_bound(cumulative.begin(), cumulative.end(), u);
        std::size_t idx = it == cumulative.end() ? last_positive
                                                 : static_cast<std::size_t>(it - cumulative.begin());
        // u > 0 guarantees the bin has positive mass
        sample.indices[t] = idx;
        sample.scales[t] = 1.0 / std::sqrt(static_cast<double>(c) * probs.p[idx]);
    }
    return sample;
}

DenseMatrix apply_sample(const DenseMatrix& m, const ColumnSample& sample) {
    DenseMatrix out(m.rows(), sample.indices.size());
    for (std::size_t t = 0; t < sample.indices.size(); ++t) {
        std::size_t j = sample.indices[t];
        if (j >= m.cols())
            throw InvalidSelectionError("apply_sample: sampled index out of range");
        double s = sample.scales[t];
        for (std::size_t i = 0; i < m.rows(); ++i) out(i, t) = s * m(i, j);
    }
    return out;
}

}  // namespace cssx
