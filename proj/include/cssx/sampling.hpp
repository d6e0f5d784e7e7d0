#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cssx/linalg.hpp"
#include "cssx/matrix.hpp"

namespace cssx {

enum class ProbKind { hybrid, leverage_only };

/// Sampling distribution over the columns of a matrix. Both kinds satisfy
/// p_i >= (leverage of row i of V_k) / (2k).
struct ProbabilityVector {
    std::vector<double> p;
    ProbKind kind = ProbKind::leverage_only;
};

/// Output of the randomized stage: c i.i.d. with-replacement column draws,
/// each carrying the rescale factor 1/sqrt(c * p_i). Jointly encodes the
/// sampling matrix S1 and the diagonal rescaling D1: column t of S1*D1 is
/// scales[t] * e_{indices[t]}.
struct ColumnSample {
    std::size_t c = 0;
    std::vector<std::size_t> indices;
    std::vector<double> scales;
};

/// Policy for the number of randomized-stage draws.
struct CMode {
    enum class Kind { theoretical, practical, explicit_count };
    Kind kind = Kind::practical;
    double c0 = 1.0;
    double alpha = 4.0;
    std::size_t count = 0;

    static CMode theoretical(double c0 = 1.0);
    static CMode practical(double alpha = 4.0);
    static CMode explicit_count(std::size_t c);
};

/// p_i = ||row i of V_k||^2 / k.
ProbabilityVector leverage_probabilities(const SvdFactors& f, std::size_t k);

/// Half leverage term plus half residual-energy term. Falls back to the
/// leverage-only distribution when the residual energy
/// ||a||_F^2 - ||a V_k V_k^T||_F^2 is at most residual_tol * ||a||_F^2
/// (the kind field records the fallback).
ProbabilityVector hybrid_probabilities(const DenseMatrix& a, const SvdFactors& f, std::size_t k,
                                       double residual_tol = 1e-12);

/// theoretical: ceil(1600 c0^2 k ln(800 c0^2 k));
/// practical:   max(2k, ceil(alpha k ln(k + 2)));
/// explicit:    the given count (must be >= k). Always returns >= k.
std::size_t choose_c(std::size_t k, const CMode& mode);

/// c i.i.d. inverse-CDF draws from probs. Index t is the first cumulative
/// bin whose upper edge is >= the t-th uniform draw of the documented
/// stream seeded with `seed`; zero-probability columns are never selected.
ColumnSample sample_exactly_c(const ProbabilityVector& probs, std::size_t c, std::uint64_t seed);

/// Gathers and rescales columns: column t of the result is
/// scales[t] * m^(indices[t]).
DenseMatrix apply_sample(const DenseMatrix& m, const ColumnSample& sample);

}  // namespace cssx
