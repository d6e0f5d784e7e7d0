#pragma once

#include <cstddef>
#include <numbers>
#include <vector>

#include "cssx/matrix.hpp"

namespace cssx {

/// Result of the deterministic stage on a k x c full-row-rank matrix.
/// Whenever sigma_k_in > 0 the selection satisfies
///   sigma_k_out >= sigma_k_in / sqrt(1 + f^2 k (c - k)).
struct RrqrSelection {
    std::vector<std::size_t> selected;  // k distinct column indices, ascending
    double sigma_k_in = 0.0;
    double sigma_k_out = 0.0;
    std::size_t swaps = 0;
};

/// Strong rank-revealing column selection: column-pivoted QR seeds the
/// selection, then selected/unselected pairs are interchanged while some
/// swap grows |det| of the selected k x k block by a factor above f.
/// Conceptually this runs on the zero-padded c x c matrix, but padding rows
/// of zeros changes no singular value, so the k x c input is used directly.
/// max_swaps == 0 selects the default budget 100 * k * c.
RrqrSelection strong_rrqr_select(const DenseMatrix& m, double f = std::numbers::sqrt2,
                                 std::size_t max_swaps = 0);

/// First k pivot columns of classical column-pivoted QR, in pivot order.
/// Ties within 1e-12 relative column norm go to the lowest index.
std::vector<std::size_t> pivoted_qr_columns(const DenseMatrix& a, std::size_t k);

}  // namespace cssx
