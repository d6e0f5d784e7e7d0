#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace cssx {

/// Dense real matrix with row-major storage. The entry-taking constructor
/// validates shape and finiteness; no NaN/Inf gets past construction.
/// A default-constructed matrix is 0x0 and only appears internally for
/// degenerate slices (e.g. an empty singular-value tail).
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols);  // zero-filled
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

    static DenseMatrix identity(std::size_t n);
    static DenseMatrix diagonal(const std::vector<double>& d);
    static DenseMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    double operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    std::span<const double> row(std::size_t i) const {
        return {entries_.data() + i * cols_, cols_};
    }
    std::span<double> row(std::size_t i) { return {entries_.data() + i * cols_, cols_}; }

    const std::vector<double>& entries() const { return entries_; }

    DenseMatrix transposed() const;
    DenseMatrix scaled(double s) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> entries_;
};

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix subtract(const DenseMatrix& a, const DenseMatrix& b);

/// Copies the given columns of `a` in order; duplicates are allowed.
DenseMatrix gather_columns(const DenseMatrix& a, std::span<const std::size_t> indices);

double column_norm_squared(const DenseMatrix& a, std::size_t j);

}  // namespace cssx
