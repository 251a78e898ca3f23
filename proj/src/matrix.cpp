#include "catcoh/matrix.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace catcoh {

IntMatrix to_integer_matrix(const ExactMatrix& m)
{
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!is_integral(m(i, j)))
                fail(ErrorKind::NotIntegral, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                                 ") = " + format_rational(m(i, j)));
            out(i, j) = boost::multiprecision::numerator(m(i, j));
        }
    return out;
}

ExactMatrix to_exact(const IntMatrix& m)
{
    ExactMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = Rational(m(i, j));
    return out;
}

bool is_integral(const ExactMatrix& m)
{
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!is_integral(m(i, j)))
                return false;
    return true;
}

ExactMatrix direct_sum(const std::vector<ExactMatrix>& blocks)
{
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    ExactMatrix out(r, c);
    r = c = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(r + i, c + j) = b(i, j);
        r += b.rows();
        c += b.cols();
    }
    return out;
}

std::string to_string(const ExactMatrix& m)
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? "," : "") << format_rational(m(i, j));
        os << "]";
    }
    os << "]";
    return os.str();
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows)
    , cols_(cols)
    , entries_(rows)
{
}

SparseMatrix SparseMatrix::from_dense(const ExactMatrix& m)
{
    SparseMatrix s(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0)
                s.entries_[i].emplace_back(j, m(i, j));
    return s;
}

SparseMatrix SparseMatrix::identity(std::size_t n)
{
    SparseMatrix s(n, n);
    for (std::size_t i = 0; i < n; ++i)
        s.entries_[i].emplace_back(i, Rational(1));
    return s;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational& value)
{
    if (r >= rows_ || c >= cols_)
        fail(ErrorKind::IndexOutOfRange, "sparse entry (" + std::to_string(r) + "," + std::to_string(c) + ")");
    if (value == 0)
        return;
    auto& row = entries_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        it->second += value;
        if (it->second == 0)
            row.erase(it);
    } else {
        row.insert(it, Entry{c, value});
    }
}

void SparseMatrix::add_block(std::size_t row0, std::size_t col0, const ExactMatrix& block, int sign)
{
    for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j)
            if (block(i, j) != 0)
                add(row0 + i, col0 + j, sign < 0 ? Rational(-block(i, j)) : block(i, j));
}

Rational SparseMatrix::at(std::size_t r, std::size_t c) const
{
    const auto& row = entries_.at(r);
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.first < col; });
    if (it != row.end() && it->first == c)
        return it->second;
    return Rational(0);
}

bool SparseMatrix::is_zero() const
{
    for (const auto& row : entries_)
        if (!row.empty())
            return false;
    return true;
}

std::size_t SparseMatrix::nonzeros() const
{
    std::size_t n = 0;
    for (const auto& row : entries_)
        n += row.size();
    return n;
}

ExactMatrix SparseMatrix::to_dense() const
{
    ExactMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (const auto& [j, v] : entries_[i])
            m(i, j) = v;
    return m;
}

SparseMatrix SparseMatrix::transpose() const
{
    SparseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (const auto& [j, v] : entries_[i])
            t.entries_[j].emplace_back(i, v);
    return t;
}

ExactMatrix SparseMatrix::block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const
{
    ExactMatrix m(nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i)
        for (const auto& [j, v] : entries_.at(row0 + i))
            if (j >= col0 && j < col0 + ncols)
                m(i, j - col0) = v;
    return m;
}

SparseMatrix SparseMatrix::submatrix(const std::vector<std::size_t>& row_idx, const std::vector<std::size_t>& col_idx) const
{
    std::vector<std::ptrdiff_t> col_map(cols_, -1);
    for (std::size_t k = 0; k < col_idx.size(); ++k)
        col_map.at(col_idx[k]) = static_cast<std::ptrdiff_t>(k);
    SparseMatrix s(row_idx.size(), col_idx.size());
    for (std::size_t k = 0; k < row_idx.size(); ++k)
        for (const auto& [j, v] : entries_.at(row_idx[k]))
            if (col_map[j] >= 0)
                s.entries_[k].emplace_back(static_cast<std::size_t>(col_map[j]), v);
    for (auto& row : s.entries_)
        std::sort(row.begin(), row.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    return s;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b)
{
    if (a.cols() != b.rows())
        fail(ErrorKind::ShapeMismatch, "sparse product shape mismatch");
    SparseMatrix out(a.rows(), b.cols());
    std::map<std::size_t, Rational> acc;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        acc.clear();
        for (const auto& [k, x] : a.row(i))
            for (const auto& [j, y] : b.row(k))
                acc[j] += x * y;
        for (const auto& [j, v] : acc)
            if (v != 0)
                out.add(i, j, v);
    }
    return out;
}

SparseMatrix operator*(const SparseMatrix& a, const ExactMatrix& b)
{
    return a * SparseMatrix::from_dense(b);
}

SparseMatrix operator*(const ExactMatrix& a, const SparseMatrix& b)
{
    return SparseMatrix::from_dense(a) * b;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        fail(ErrorKind::ShapeMismatch, "sparse difference shape mismatch");
    SparseMatrix out = a;
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (const auto& [j, v] : b.row(i))
            out.add(i, j, -v);
    return out;
}

} // namespace catcoh
