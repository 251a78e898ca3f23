#include "catcoh/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace catcoh {

namespace {

Integer abs_value(const Integer& x)
{
    return x < 0 ? Integer(-x) : x;
}

// Row/column reduction to Smith form; U and V are updated alongside when given.
class SmithReducer {
public:
    SmithReducer(IntMatrix a, IntMatrix* u, IntMatrix* v)
        : a_(std::move(a))
        , u_(u)
        , v_(v)
    {
    }

    IntMatrix run()
    {
        const std::size_t m = a_.rows(), n = a_.cols();
        for (std::size_t t = 0; t < std::min(m, n); ++t) {
            auto best = min_entry(t, t, m, n);
            if (!best)
                break;
            move_to_pivot(t, *best);
            for (;;) {
                bool dirty = false;
                for (std::size_t i = t + 1; i < m; ++i)
                    if (a_(i, t) != 0) {
                        Integer q = a_(i, t) / a_(t, t);
                        if (q != 0)
                            row_addmul(i, t, -q);
                        dirty |= a_(i, t) != 0;
                    }
                for (std::size_t j = t + 1; j < n; ++j)
                    if (a_(t, j) != 0) {
                        Integer q = a_(t, j) / a_(t, t);
                        if (q != 0)
                            col_addmul(j, t, -q);
                        dirty |= a_(t, j) != 0;
                    }
                if (dirty) {
                    move_to_pivot(t, cross_min(t));
                    continue;
                }
                if (auto bad = non_divisible(t)) {
                    row_addmul(t, *bad, 1);
                    continue;
                }
                break;
            }
            if (a_(t, t) < 0)
                row_negate(t);
        }
        return std::move(a_);
    }

private:
    std::optional<std::pair<std::size_t, std::size_t>> min_entry(std::size_t r0, std::size_t c0, std::size_t m,
                                                                 std::size_t n) const
    {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        Integer best_abs;
        for (std::size_t i = r0; i < m; ++i)
            for (std::size_t j = c0; j < n; ++j) {
                const Integer& x = a_(i, j);
                if (x == 0)
                    continue;
                Integer ax = abs_value(x);
                if (!best || ax < best_abs) {
                    best = {i, j};
                    best_abs = ax;
                    if (best_abs == 1)
                        return best;
                }
            }
        return best;
    }

    std::pair<std::size_t, std::size_t> cross_min(std::size_t t) const
    {
        std::pair<std::size_t, std::size_t> best{t, t};
        Integer best_abs = abs_value(a_(t, t));
        auto consider = [&](std::size_t i, std::size_t j) {
            if (a_(i, j) == 0)
                return;
            Integer ax = abs_value(a_(i, j));
            if (best_abs == 0 || ax < best_abs) {
                best = {i, j};
                best_abs = ax;
            }
        };
        for (std::size_t i = t; i < a_.rows(); ++i)
            consider(i, t);
        for (std::size_t j = t; j < a_.cols(); ++j)
            consider(t, j);
        return best;
    }

    std::optional<std::size_t> non_divisible(std::size_t t) const
    {
        const Integer& p = a_(t, t);
        if (abs_value(p) == 1)
            return std::nullopt;
        for (std::size_t i = t + 1; i < a_.rows(); ++i)
            for (std::size_t j = t + 1; j < a_.cols(); ++j)
                if (a_(i, j) != 0 && a_(i, j) % p != 0)
                    return i;
        return std::nullopt;
    }

    void move_to_pivot(std::size_t t, std::pair<std::size_t, std::size_t> at)
    {
        if (at.first != t) {
            a_.swap_rows(t, at.first);
            if (u_)
                u_->swap_rows(t, at.first);
        }
        if (at.second != t) {
            a_.swap_cols(t, at.second);
            if (v_)
                v_->swap_cols(t, at.second);
        }
    }

    static void row_addmul_in(IntMatrix& m, std::size_t i, std::size_t j, const Integer& q)
    {
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(j, c) != 0)
                m(i, c) += q * m(j, c);
    }

    static void col_addmul_in(IntMatrix& m, std::size_t i, std::size_t j, const Integer& q)
    {
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (m(r, j) != 0)
                m(r, i) += q * m(r, j);
    }

    // row i += q * row j
    void row_addmul(std::size_t i, std::size_t j, const Integer& q)
    {
        row_addmul_in(a_, i, j, q);
        if (u_)
            row_addmul_in(*u_, i, j, q);
    }

    // column i += q * column j
    void col_addmul(std::size_t i, std::size_t j, const Integer& q)
    {
        col_addmul_in(a_, i, j, q);
        if (v_)
            col_addmul_in(*v_, i, j, q);
    }

    void row_negate(std::size_t i)
    {
        for (std::size_t c = 0; c < a_.cols(); ++c)
            a_(i, c) = -a_(i, c);
        if (u_)
            for (std::size_t c = 0; c < u_->cols(); ++c)
                (*u_)(i, c) = -(*u_)(i, c);
    }

    IntMatrix a_;
    IntMatrix* u_;
    IntMatrix* v_;
};

std::vector<Integer> diagonal_of(const IntMatrix& d)
{
    std::vector<Integer> out;
    for (std::size_t t = 0; t < std::min(d.rows(), d.cols()) && d(t, t) != 0; ++t)
        out.push_back(d(t, t));
    return out;
}

using SparseRow = std::vector<std::pair<std::size_t, Integer>>;

// Sparse elimination on unit pivots. Each unit pivot contributes an invariant
// factor 1; the rows and columns left over are returned as a dense block.
struct UnitElimination {
    std::size_t units = 0;
    IntMatrix rest;
};

UnitElimination eliminate_units(std::vector<SparseRow> rows, std::size_t ncols)
{
    const std::size_t nrows = rows.size();
    std::vector<std::vector<std::size_t>> col_rows(ncols);
    for (std::size_t r = 0; r < nrows; ++r)
        for (const auto& [c, v] : rows[r])
            col_rows[c].push_back(r);
    std::vector<char> row_alive(nrows, 1), col_alive(ncols, 1);

    auto value_at = [&](std::size_t r, std::size_t c) -> const Integer* {
        auto it = std::lower_bound(rows[r].begin(), rows[r].end(), c,
                                   [](const auto& e, std::size_t col) { return e.first < col; });
        if (it == rows[r].end() || it->first != c)
            return nullptr;
        return &it->second;
    };

    std::vector<std::size_t> order(nrows);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return rows[a].size() < rows[b].size(); });

    UnitElimination out;
    SparseRow merged;
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t p : order) {
            if (!row_alive[p])
                continue;
            std::size_t pivot_col = ncols;
            std::size_t pivot_weight = 0;
            for (const auto& [c, v] : rows[p])
                if (v == 1 || v == -1) {
                    std::size_t w = col_rows[c].size();
                    if (pivot_col == ncols || w < pivot_weight) {
                        pivot_col = c;
                        pivot_weight = w;
                    }
                }
            if (pivot_col == ncols)
                continue;
            const Integer u = *value_at(p, pivot_col);
            std::vector<std::size_t> targets = std::move(col_rows[pivot_col]);
            col_rows[pivot_col].clear();
            for (std::size_t r : targets) {
                if (r == p || !row_alive[r])
                    continue;
                const Integer* v = value_at(r, pivot_col);
                if (!v)
                    continue;
                const Integer factor = *v * u;
                merged.clear();
                auto a = rows[r].begin(), ae = rows[r].end();
                auto b = rows[p].begin(), be = rows[p].end();
                while (a != ae || b != be) {
                    if (b == be || (a != ae && a->first < b->first)) {
                        merged.push_back(std::move(*a));
                        ++a;
                    } else if (a == ae || b->first < a->first) {
                        if (col_alive[b->first]) {
                            merged.emplace_back(b->first, -factor * b->second);
                            col_rows[b->first].push_back(r);
                        }
                        ++b;
                    } else {
                        Integer x = a->second - factor * b->second;
                        if (x != 0)
                            merged.emplace_back(a->first, std::move(x));
                        ++a;
                        ++b;
                    }
                }
                rows[r].swap(merged);
            }
            row_alive[p] = 0;
            col_alive[pivot_col] = 0;
            ++out.units;
            progress = true;
        }
    }

    std::vector<std::size_t> live_rows, col_pos(ncols, ncols);
    std::size_t live_cols = 0;
    for (std::size_t r = 0; r < nrows; ++r) {
        if (!row_alive[r])
            continue;
        bool any = false;
        for (const auto& [c, v] : rows[r])
            if (col_alive[c]) {
                any = true;
                if (col_pos[c] == ncols)
                    col_pos[c] = live_cols++;
            }
        if (any)
            live_rows.push_back(r);
    }
    out.rest = IntMatrix(live_rows.size(), live_cols);
    for (std::size_t i = 0; i < live_rows.size(); ++i)
        for (const auto& [c, v] : rows[live_rows[i]])
            if (col_alive[c])
                out.rest(i, col_pos[c]) = v;
    return out;
}

std::vector<SparseRow> integral_rows(const SparseMatrix& a, bool scale)
{
    std::vector<SparseRow> rows(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        Integer l = 1;
        if (scale)
            for (const auto& [c, v] : a.row(r))
                l = boost::multiprecision::lcm(l, Integer(boost::multiprecision::denominator(v)));
        rows[r].reserve(a.row(r).size());
        for (const auto& [c, v] : a.row(r)) {
            Rational x = v * l;
            if (!is_integral(x))
                fail(ErrorKind::NotIntegral, "entry (" + std::to_string(r) + "," + std::to_string(c) +
                                                 ") = " + format_rational(v));
            rows[r].emplace_back(c, boost::multiprecision::numerator(x));
        }
    }
    return rows;
}

std::size_t dense_rank(const ExactMatrix& a)
{
    std::vector<std::size_t> pivots;
    rref(a, &pivots);
    return pivots.size();
}

} // namespace

std::size_t SmithForm::rank() const
{
    return diagonal().size();
}

std::vector<Integer> SmithForm::diagonal() const
{
    return diagonal_of(D);
}

SmithForm smith_normal_form(const IntMatrix& a)
{
    SmithForm s;
    s.U = IntMatrix::identity(a.rows());
    s.V = IntMatrix::identity(a.cols());
    s.D = SmithReducer(a, &s.U, &s.V).run();
    return s;
}

std::vector<Integer> invariant_factors(const IntMatrix& a)
{
    return diagonal_of(SmithReducer(a, nullptr, nullptr).run());
}

std::vector<Integer> invariant_factors(const SparseMatrix& a)
{
    auto elim = eliminate_units(integral_rows(a, false), a.cols());
    std::vector<Integer> out(elim.units, Integer(1));
    auto rest = invariant_factors(elim.rest);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

std::size_t rank(const ExactMatrix& a)
{
    return rank(SparseMatrix::from_dense(a));
}

std::size_t rank(const SparseMatrix& a)
{
    auto elim = eliminate_units(integral_rows(a, true), a.cols());
    return elim.units + dense_rank(to_exact(elim.rest));
}

Integer determinant(const IntMatrix& a)
{
    if (a.rows() != a.cols())
        fail(ErrorKind::ShapeMismatch, "determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0)
        return 1;
    IntMatrix m = a;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m(swap, k) == 0)
                ++swap;
            if (swap == n)
                return 0;
            m.swap_rows(k, swap);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

ExactMatrix rref(const ExactMatrix& a, std::vector<std::size_t>* pivots)
{
    ExactMatrix m = a;
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0)
            ++p;
        if (p == m.rows())
            continue;
        m.swap_rows(r, p);
        Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j)
            m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0)
                continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (m(r, j) != 0)
                    m(i, j) -= f * m(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    if (pivots)
        *pivots = std::move(piv);
    return m;
}

ExactMatrix kernel_basis(const ExactMatrix& a)
{
    std::vector<std::size_t> pivots;
    ExactMatrix r = rref(a, &pivots);
    std::vector<char> is_pivot(a.cols(), 0);
    for (std::size_t p : pivots)
        is_pivot[p] = 1;
    ExactMatrix k(a.cols(), a.cols() - pivots.size());
    std::size_t col = 0;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f])
            continue;
        k(f, col) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            k(pivots[i], col) = -r(i, f);
        ++col;
    }
    return k;
}

IntMatrix integer_kernel_basis(const IntMatrix& a)
{
    SmithForm s = smith_normal_form(a);
    const std::size_t r = s.rank();
    IntMatrix k(a.cols(), a.cols() - r);
    for (std::size_t i = 0; i < a.cols(); ++i)
        for (std::size_t j = r; j < a.cols(); ++j)
            k(i, j - r) = s.V(i, j);
    return k;
}

ExactMatrix column_space_basis(const ExactMatrix& a)
{
    std::vector<std::size_t> pivots;
    rref(a, &pivots);
    ExactMatrix out(a.rows(), pivots.size());
    for (std::size_t j = 0; j < pivots.size(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i)
            out(i, j) = a(i, pivots[j]);
    return out;
}

ExactMatrix inverse(const ExactMatrix& a)
{
    if (a.rows() != a.cols())
        fail(ErrorKind::ShapeMismatch, "inverse of a non-square matrix");
    const std::size_t n = a.rows();
    ExactMatrix aug = hconcat({a, ExactMatrix::identity(n)}, n);
    std::vector<std::size_t> pivots;
    ExactMatrix r = rref(aug, &pivots);
    if (n > 0 && (pivots.size() < n || pivots[n - 1] != n - 1))
        fail(ErrorKind::InternalInvariant, "matrix is singular");
    ExactMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out(i, j) = r(i, n + j);
    return out;
}

ExactMatrix extend_to_basis(const ExactMatrix& a)
{
    return column_space_basis(hconcat({a, ExactMatrix::identity(a.rows())}, a.rows()));
}

ExactMatrix hconcat(const std::vector<ExactMatrix>& parts, std::size_t rows)
{
    std::size_t cols = 0;
    for (const auto& p : parts) {
        if (p.rows() != rows)
            fail(ErrorKind::ShapeMismatch, "hconcat of matrices with different row counts");
        cols += p.cols();
    }
    ExactMatrix out(rows, cols);
    std::size_t c0 = 0;
    for (const auto& p : parts) {
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < p.cols(); ++j)
                out(i, c0 + j) = p(i, j);
        c0 += p.cols();
    }
    return out;
}

} // namespace catcoh
