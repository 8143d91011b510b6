#include "taulat/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace taulat {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
    Matrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                out.at(i, j) += a * o.at(k, j);
        }
    return out;
}

bool Matrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

Rational Matrix::det() const {
    if (!is_square()) throw std::invalid_argument("Matrix::det: not square");
    const std::size_t n = rows_;
    if (n == 0) return Rational(1);

    Matrix m = *this;
    Rational prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < n && m.at(pivot, k).is_zero()) ++pivot;
            if (pivot == n) return Rational(0);
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m.at(k, j), m.at(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
            m.at(i, k) = Rational(0);
        }
        prev = m.at(k, k);
    }
    Rational d = m.at(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

std::size_t Matrix::rank() const {
    Matrix m = *this;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
        std::size_t pivot = r;
        while (pivot < rows_ && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == rows_) continue;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap(m.at(r, j), m.at(pivot, j));
        const Rational lead = m.at(r, col);
        for (std::size_t i = r + 1; i < rows_; ++i) {
            if (m.at(i, col).is_zero()) continue;
            const Rational f = m.at(i, col) / lead;
            for (std::size_t j = col; j < cols_; ++j)
                m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

Matrix Matrix::submatrix(const std::vector<std::size_t>& row_idx,
                         const std::vector<std::size_t>& col_idx) const {
    Matrix out(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j) {
            if (row_idx[i] >= rows_ || col_idx[j] >= cols_)
                throw std::out_of_range("Matrix::submatrix: index out of range");
            out.at(i, j) = at(row_idx[i], col_idx[j]);
        }
    return out;
}

} // namespace taulat
