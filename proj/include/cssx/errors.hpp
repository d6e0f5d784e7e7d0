#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cssx {

// Base class for every error the toolkit raises on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// svd() and friends refuse an identically zero input.
struct ZeroMatrixError : Error {
    ZeroMatrixError() : Error("matrix is identically zero") {}
};

// Requested k exceeds the numerical rank of the input.
struct RankDeficientError : Error {
    using Error::Error;
};

// Column index set is out of range or contains duplicates.
struct InvalidSelectionError : Error {
    using Error::Error;
};

// The randomized stage lost rank: sigma_k of the sampled matrix fell below
// the rank tolerance. Retrying with a fresh seed is the intended recovery.
struct SampleRankLossError : Error {
    explicit SampleRankLossError(double sigma_k)
        : Error("sampled matrix lost rank (sigma_k = " + std::to_string(sigma_k) + ")"),
          sigma_k_sampled(sigma_k) {}
    double sigma_k_sampled = 0.0;
};

// Interchange loop exceeded its swap budget. Diagnostic; each swap grows the
// leading determinant by more than f, so this should be unreachable.
struct NonTerminationError : Error {
    using Error::Error;
};

// Every boosted trial failed with SampleRankLossError.
struct AllTrialsFailedError : Error {
    using Error::Error;
};

// Exhaustive enumeration would exceed the configured subset budget.
struct BudgetExceededError : Error {
    using Error::Error;
};

// Matrix file could not be parsed; line/column are 1-based.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t line_, std::size_t column_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " + std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
    std::size_t line = 0;
    std::size_t column = 0;
};

// A parsed entry was NaN or infinite.
struct NonFiniteError : Error {
    using Error::Error;
};

}  // namespace cssx
