#pragma once

#include <cstddef>
#include <vector>

#include "taulat/rational.hpp"

namespace taulat {

// Dense matrix of rationals, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix operator*(const Matrix& o) const;

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;

    // Fraction-free Bareiss elimination with row pivoting.
    Rational det() const;
    std::size_t rank() const;

    // Submatrix picking the given rows/columns (0-based indices, in order).
    Matrix submatrix(const std::vector<std::size_t>& row_idx,
                     const std::vector<std::size_t>& col_idx) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

} // namespace taulat
