#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace oracle {

using catcoh::FinCat;
using catcoh::Rational;

std::vector<Integer> smith_diagonal(IntRows a)
{
    std::vector<Integer> diag;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // smallest nonzero entry in the trailing block
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
                    pr = i;
                    pc = j;
                }
        if (pr == rows)
            break;
        std::swap(a[t], a[pr]);
        for (auto& row : a)
            std::swap(row[t], row[pc]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                Integer q = a[i][t] / a[t][t];
                if (q != 0)
                    for (std::size_t j = t; j < cols; ++j)
                        a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) {
                    std::swap(a[t], a[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                Integer q = a[t][j] / a[t][t];
                if (q != 0)
                    for (std::size_t i = t; i < rows; ++i)
                        a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) {
                    for (auto& row : a)
                        std::swap(row[t], row[j]);
                    clean = false;
                }
            }
            if (clean)
                for (std::size_t i = t + 1; i < rows && clean; ++i)
                    for (std::size_t j = t + 1; j < cols && clean; ++j)
                        if (a[i][j] % a[t][t] != 0) {
                            for (std::size_t k = t; k < cols; ++k)
                                a[t][k] += a[i][k];
                            clean = false;
                        }
        }
        diag.push_back(abs(a[t][t]));
        ++t;
    }
    return diag;
}

namespace {

struct Reduced {
    std::size_t rank = 0;
    std::vector<Integer> torsion;
};

Reduced reduce(const std::vector<std::size_t>& dims, const std::vector<IntRows>& bd, std::size_t n)
{
    // bd[n] with n in 1..top; empty outside
    if (n == 0 || n >= bd.size() || dims[n] == 0 || dims[n - 1] == 0)
        return {};
    Reduced r;
    for (const auto& d : smith_diagonal(bd[n])) {
        ++r.rank;
        if (d > 1)
            r.torsion.push_back(d);
    }
    return r;
}

} // namespace

std::vector<HomologyGroup> homology_from_boundaries(const std::vector<std::size_t>& dims,
                                                    const std::vector<IntRows>& bd)
{
    std::vector<HomologyGroup> out;
    for (std::size_t n = 0; n + 1 < dims.size(); ++n) {
        Reduced out_map = reduce(dims, bd, n);
        Reduced in_map = reduce(dims, bd, n + 1);
        HomologyGroup h;
        h.free_rank = dims[n] - out_map.rank - in_map.rank;
        h.torsion = in_map.torsion;
        out.push_back(h);
    }
    return out;
}

std::vector<HomologyGroup> cohomology_from_boundaries(const std::vector<std::size_t>& dims,
                                                      const std::vector<IntRows>& bd)
{
    std::vector<HomologyGroup> out;
    for (std::size_t n = 0; n + 1 < dims.size(); ++n) {
        Reduced in_map = reduce(dims, bd, n);
        Reduced out_map = reduce(dims, bd, n + 1);
        HomologyGroup h;
        h.free_rank = dims[n] - out_map.rank - in_map.rank;
        h.torsion = in_map.torsion;
        out.push_back(h);
    }
    return out;
}

namespace {

std::vector<std::size_t> decode(std::size_t code, std::size_t order, std::size_t n)
{
    std::vector<std::size_t> g(n);
    for (std::size_t i = n; i-- > 0;) {
        g[i] = code % order;
        code /= order;
    }
    return g;
}

std::size_t encode(const std::vector<std::size_t>& g, std::size_t order)
{
    std::size_t code = 0;
    for (auto x : g)
        code = code * order + x;
    return code;
}

std::pair<std::vector<std::size_t>, std::vector<IntRows>> bar_complex(
    const std::vector<std::vector<std::size_t>>& mult, std::size_t top)
{
    const std::size_t order = mult.size();
    std::vector<std::size_t> dims;
    std::size_t d = 1;
    for (std::size_t n = 0; n <= top + 2; ++n) {
        dims.push_back(d);
        d *= order;
    }
    std::vector<IntRows> bd(top + 3);
    for (std::size_t n = 1; n <= top + 2; ++n) {
        IntRows m(dims[n - 1], std::vector<Integer>(dims[n], 0));
        for (std::size_t c = 0; c < dims[n]; ++c) {
            auto g = decode(c, order, n);
            for (std::size_t i = 0; i <= n; ++i) {
                std::vector<std::size_t> face;
                if (i == 0)
                    face.assign(g.begin() + 1, g.end());
                else if (i == n)
                    face.assign(g.begin(), g.end() - 1);
                else {
                    face = g;
                    face[i - 1] = mult[g[i - 1]][g[i]];
                    face.erase(face.begin() + static_cast<long>(i));
                }
                m[encode(face, order)][c] += (i % 2 == 0) ? 1 : -1;
            }
        }
        bd[n] = std::move(m);
    }
    return {dims, bd};
}

} // namespace

std::vector<HomologyGroup> bar_group_cohomology(const std::vector<std::vector<std::size_t>>& mult, std::size_t top)
{
    auto [dims, bd] = bar_complex(mult, top);
    auto h = cohomology_from_boundaries(dims, bd);
    h.resize(top + 1);
    return h;
}

std::vector<HomologyGroup> bar_group_homology(const std::vector<std::vector<std::size_t>>& mult, std::size_t top)
{
    auto [dims, bd] = bar_complex(mult, top);
    auto h = homology_from_boundaries(dims, bd);
    h.resize(top + 1);
    return h;
}

namespace {

std::pair<std::vector<std::size_t>, std::vector<IntRows>> order_complex(const std::vector<std::vector<bool>>& leq,
                                                                        std::size_t top)
{
    const std::size_t n = leq.size();
    std::vector<std::vector<std::vector<std::size_t>>> chains(top + 3);
    for (std::size_t x = 0; x < n; ++x)
        chains[0].push_back({x});
    for (std::size_t k = 1; k <= top + 2; ++k)
        for (const auto& c : chains[k - 1])
            for (std::size_t y = 0; y < n; ++y)
                if (y != c.back() && leq[c.back()][y]) {
                    auto next = c;
                    next.push_back(y);
                    chains[k].push_back(std::move(next));
                }
    std::vector<std::size_t> dims;
    for (const auto& level : chains)
        dims.push_back(level.size());
    std::vector<IntRows> bd(top + 3);
    for (std::size_t k = 1; k <= top + 2; ++k) {
        std::map<std::vector<std::size_t>, std::size_t> index;
        for (std::size_t i = 0; i < chains[k - 1].size(); ++i)
            index[chains[k - 1][i]] = i;
        IntRows m(dims[k - 1], std::vector<Integer>(dims[k], 0));
        for (std::size_t c = 0; c < dims[k]; ++c)
            for (std::size_t i = 0; i <= k; ++i) {
                auto face = chains[k][c];
                face.erase(face.begin() + static_cast<long>(i));
                m[index.at(face)][c] += (i % 2 == 0) ? 1 : -1;
            }
        bd[k] = std::move(m);
    }
    return {dims, bd};
}

} // namespace

std::vector<HomologyGroup> order_complex_cohomology(const std::vector<std::vector<bool>>& leq, std::size_t top)
{
    auto [dims, bd] = order_complex(leq, top);
    auto h = cohomology_from_boundaries(dims, bd);
    h.resize(top + 1);
    return h;
}

std::vector<HomologyGroup> order_complex_homology(const std::vector<std::vector<bool>>& leq, std::size_t top)
{
    auto [dims, bd] = order_complex(leq, top);
    auto h = homology_from_boundaries(dims, bd);
    h.resize(top + 1);
    return h;
}

namespace {

template <class Visit>
void each_tuple(const FinCat& c, std::size_t n, Visit visit)
{
    const std::size_t m = c.morphism_count();
    std::vector<std::size_t> t(n, 0);
    if (n == 0)
        return;
    while (true) {
        bool ok = true;
        for (std::size_t i = 0; i + 1 < n && ok; ++i)
            ok = c.dst(t[i + 1]) == c.src(t[i]);
        if (ok)
            visit(t);
        std::size_t k = 0;
        while (k < n && ++t[k] == m)
            t[k++] = 0;
        if (k == n)
            return;
    }
}

} // namespace

std::size_t count_nerve(const FinCat& c, std::size_t n)
{
    if (n == 0)
        return c.object_count();
    std::size_t count = 0;
    each_tuple(c, n, [&](const std::vector<std::size_t>&) { ++count; });
    return count;
}

std::size_t count_nondegenerate_nerve(const FinCat& c, std::size_t n)
{
    if (n == 0)
        return c.object_count();
    std::size_t count = 0;
    each_tuple(c, n, [&](const std::vector<std::size_t>& t) {
        if (std::none_of(t.begin(), t.end(), [&](std::size_t f) { return c.is_identity(f); }))
            ++count;
    });
    return count;
}

std::pair<std::size_t, std::size_t> count_factorization(const FinCat& c)
{
    std::size_t morphisms = 0;
    for (std::size_t f = 0; f < c.morphism_count(); ++f) {
        std::size_t into = 0, out = 0;
        for (std::size_t a = 0; a < c.morphism_count(); ++a) {
            into += c.dst(a) == c.src(f);
            out += c.src(a) == c.dst(f);
        }
        morphisms += into * out;
    }
    return {c.morphism_count(), morphisms};
}

std::size_t count_under(const catcoh::FinFunctor& u, std::size_t b)
{
    const FinCat& E = *u.source();
    const FinCat& B = *u.target();
    std::size_t count = 0;
    for (std::size_t e = 0; e < E.object_count(); ++e)
        for (std::size_t m = 0; m < B.morphism_count(); ++m)
            count += B.src(m) == b && B.dst(m) == u.object(e);
    return count;
}

Rational leibniz_determinant(const catcoh::ExactMatrix& m)
{
    const std::size_t n = m.rows();
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    Rational total = 0;
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                inversions += p[i] > p[j];
        Rational term = inversions % 2 ? -1 : 1;
        for (std::size_t i = 0; i < n; ++i)
            term *= m(i, p[i]);
        total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

std::vector<std::vector<bool>> order_relation(const FinCat& c)
{
    std::vector<std::vector<bool>> leq(c.object_count(), std::vector<bool>(c.object_count(), false));
    for (std::size_t m = 0; m < c.morphism_count(); ++m)
        leq[c.src(m)][c.dst(m)] = true;
    return leq;
}

} // namespace oracle
