#pragma once

#include <string>

#include "cssx/matrix.hpp"

namespace cssx {

enum class MatrixFormat { matrix_market, csv };

/// Matrix Market "array real general" (dense, column-major values) and
/// "coordinate real general" (duplicates summed); or headerless CSV rows.
/// All entries must be finite.
DenseMatrix read_matrix(const std::string& path, MatrixFormat format);

/// Same parser on an in-memory buffer.
DenseMatrix parse_matrix(const std::string& text, MatrixFormat format);

void write_csv(const std::string& path, const DenseMatrix& a);

}  // namespace cssx
