#pragma once

// Dense and sparse exact matrices.
//
// Convention, fixed across the library: columns index the basis of the
// source module, rows index the basis of the target module. A map
// M: R^a -> R^b is therefore a b x a matrix, and composition g after f is
// the product G * F.

#include "catcoh/error.hpp"
#include "catcoh/scalar.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace catcoh {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows)
        , cols_(cols)
        , data_(rows * cols)
    {
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    static Matrix scalar(std::size_t n, const T& value)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = value;
        return m;
    }

    // rows given as nested lists; all rows must have the same length
    static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols_if_empty = 0)
    {
        std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
        Matrix m(rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols)
                fail(ErrorKind::ShapeMismatch, "ragged matrix rows");
            for (std::size_t c = 0; c < cols; ++c)
                m(r, c) = rows[r][c];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return data_.empty(); }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    bool is_zero() const
    {
        for (const auto& x : data_)
            if (x != 0)
                return false;
        return true;
    }

    bool is_identity() const
    {
        if (rows_ != cols_)
            return false;
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if ((*this)(r, c) != (r == c ? 1 : 0))
                    return false;
        return true;
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                t(c, r) = (*this)(r, c);
        return t;
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t c = 0; c < cols_; ++c)
            std::swap((*this)(a, c), (*this)(b, c));
    }

    void swap_cols(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t r = 0; r < rows_; ++r)
            std::swap((*this)(r, a), (*this)(r, b));
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b)
{
    if (a.cols() != b.rows())
        fail(ErrorKind::ShapeMismatch, "product of " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                           " and " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    Matrix<T> out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const T& x = a(i, k);
            if (x == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(k, j) != 0)
                    out(i, j) += x * b(k, j);
        }
    return out;
}

template <class T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        fail(ErrorKind::ShapeMismatch, "sum of differently shaped matrices");
    Matrix<T> out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) += b(i, j);
    return out;
}

template <class T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        fail(ErrorKind::ShapeMismatch, "difference of differently shaped matrices");
    Matrix<T> out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) -= b(i, j);
    return out;
}

template <class T>
Matrix<T> operator*(const T& s, const Matrix<T>& a)
{
    Matrix<T> out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) *= s;
    return out;
}

using ExactMatrix = Matrix<Rational>;
using IntMatrix = Matrix<Integer>;

IntMatrix to_integer_matrix(const ExactMatrix& m);
ExactMatrix to_exact(const IntMatrix& m);
bool is_integral(const ExactMatrix& m);

// Block diagonal sum, blocks in order.
ExactMatrix direct_sum(const std::vector<ExactMatrix>& blocks);

std::string to_string(const ExactMatrix& m);

// Row-sparse rational matrix. Rows keep (column, value) pairs sorted by column
// with no explicit zeros. Used for complex differentials, where blocks are
// sparse and dense storage would dominate memory at moderate nerve sizes.
class SparseMatrix {
public:
    using Entry = std::pair<std::size_t, Rational>;

    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols);

    static SparseMatrix from_dense(const ExactMatrix& m);
    static SparseMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    // accumulates value into (r, c)
    void add(std::size_t r, std::size_t c, const Rational& value);
    // accumulates sign * block with top-left corner (row0, col0)
    void add_block(std::size_t row0, std::size_t col0, const ExactMatrix& block, int sign = 1);

    const std::vector<Entry>& row(std::size_t r) const { return entries_[r]; }
    Rational at(std::size_t r, std::size_t c) const;

    bool is_zero() const;
    std::size_t nonzeros() const;
    ExactMatrix to_dense() const;
    SparseMatrix transpose() const;
    // dense sub-block, used when comparing blocks
    ExactMatrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
    SparseMatrix submatrix(const std::vector<std::size_t>& row_idx, const std::vector<std::size_t>& col_idx) const;

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::vector<Entry>> entries_;
};

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix operator*(const SparseMatrix& a, const ExactMatrix& b);
SparseMatrix operator*(const ExactMatrix& a, const SparseMatrix& b);
SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);

} // namespace catcoh
