#include "catcoh/simplex.hpp"

#include <algorithm>
#include <mutex>

namespace catcoh {

namespace detail {

struct NerveCache {
    std::mutex mutex;
    std::vector<std::unique_ptr<const std::vector<Simplex>>> levels;
    std::vector<std::unique_ptr<const std::vector<Simplex>>> nondegenerate;
};

std::shared_ptr<NerveCache> make_nerve_cache()
{
    return std::make_shared<NerveCache>();
}

} // namespace detail

std::size_t Simplex::object(const FinCat& c, std::size_t k) const
{
    if (k == 0)
        return vertex;
    return c.src(chain.at(k - 1));
}

Simplex make_simplex(const FinCat& c, std::vector<std::size_t> chain)
{
    if (chain.empty())
        fail(ErrorKind::InvalidInput, "a chain needs at least one morphism; use vertex_simplex for objects");
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (chain[i] >= c.morphism_count())
            fail(ErrorKind::IndexOutOfRange, "morphism index " + std::to_string(chain[i]));
        if (i + 1 < chain.size() && c.src(chain[i]) != c.dst(chain[i + 1]))
            fail(ErrorKind::CompositionDomainMismatch, "chain entries " + c.morphism_name(chain[i]) + " and " +
                                                           c.morphism_name(chain[i + 1]) + " are not composable");
    }
    Simplex s;
    s.vertex = c.dst(chain.front());
    s.chain = std::move(chain);
    return s;
}

Simplex vertex_simplex(std::size_t object)
{
    Simplex s;
    s.vertex = object;
    return s;
}

std::string simplex_key(const FinCat& c, const Simplex& s)
{
    if (s.chain.empty())
        return c.object_name(s.vertex);
    std::string out;
    for (std::size_t i = 0; i < s.chain.size(); ++i) {
        if (i)
            out += '.';
        out += c.morphism_name(s.chain[i]);
    }
    return out;
}

bool OrderMap::is_injective() const
{
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] == values[i - 1])
            return false;
    return true;
}

bool OrderMap::is_identity() const
{
    if (values.size() != target_dim + 1)
        return false;
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] != i)
            return false;
    return true;
}

OrderMap OrderMap::make(std::vector<std::size_t> values, std::size_t target_dim)
{
    if (values.empty())
        fail(ErrorKind::NotOrderPreserving, "an order map needs at least one value");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] > target_dim)
            fail(ErrorKind::NotOrderPreserving, "value " + std::to_string(values[i]) + " exceeds [" +
                                                    std::to_string(target_dim) + "]");
        if (i > 0 && values[i] < values[i - 1])
            fail(ErrorKind::NotOrderPreserving, "values decrease at position " + std::to_string(i));
    }
    OrderMap m;
    m.values = std::move(values);
    m.target_dim = target_dim;
    return m;
}

OrderMap OrderMap::identity(std::size_t n)
{
    OrderMap m;
    m.target_dim = n;
    for (std::size_t i = 0; i <= n; ++i)
        m.values.push_back(i);
    return m;
}

OrderMap OrderMap::coface(std::size_t n, std::size_t i)
{
    if (n == 0 || i > n)
        fail(ErrorKind::NotOrderPreserving, "no coface δ^" + std::to_string(i) + " into [" + std::to_string(n) + "]");
    OrderMap m;
    m.target_dim = n;
    for (std::size_t k = 0; k <= n; ++k)
        if (k != i)
            m.values.push_back(k);
    return m;
}

OrderMap OrderMap::codegeneracy(std::size_t n, std::size_t i)
{
    if (i > n)
        fail(ErrorKind::NotOrderPreserving, "no codegeneracy σ^" + std::to_string(i) + " onto [" + std::to_string(n) + "]");
    OrderMap m;
    m.target_dim = n;
    for (std::size_t k = 0; k <= n + 1; ++k)
        m.values.push_back(k <= i ? k : k - 1);
    return m;
}

OrderMap compose(const OrderMap& a, const OrderMap& b)
{
    if (b.target_dim != a.source_dim())
        fail(ErrorKind::NotOrderPreserving, "order maps are not composable");
    OrderMap m;
    m.target_dim = a.target_dim;
    for (std::size_t v : b.values)
        m.values.push_back(a.values[v]);
    return m;
}

std::vector<OrderMap> all_order_maps(std::size_t n, std::size_t m)
{
    std::vector<OrderMap> out;
    std::vector<std::size_t> v(n + 1, 0);
    for (;;) {
        out.push_back(OrderMap{v, m});
        // next non-decreasing sequence with values <= m
        std::size_t k = n + 1;
        while (k > 0 && v[k - 1] == m)
            --k;
        if (k == 0)
            break;
        ++v[k - 1];
        for (std::size_t j = k; j <= n; ++j)
            v[j] = v[k - 1];
    }
    return out;
}

Simplex apply_simplex_map(const FinCat& c, const OrderMap& sigma, const Simplex& g)
{
    if (sigma.target_dim != g.dim())
        fail(ErrorKind::InvalidSimplexMorphism, "order map lands in [" + std::to_string(sigma.target_dim) +
                                                    "] but the simplex has dimension " + std::to_string(g.dim()));
    Simplex f;
    f.vertex = g.object(c, sigma.values[0]);
    f.chain.reserve(sigma.source_dim());
    std::vector<std::size_t> piece;
    for (std::size_t i = 1; i < sigma.values.size(); ++i) {
        std::size_t lo = sigma.values[i - 1], hi = sigma.values[i];
        if (lo == hi) {
            f.chain.push_back(c.identity(g.object(c, hi)));
            continue;
        }
        if (hi == lo + 1) {
            f.chain.push_back(g.chain[lo]);
            continue;
        }
        piece.assign(g.chain.begin() + static_cast<std::ptrdiff_t>(lo), g.chain.begin() + static_cast<std::ptrdiff_t>(hi));
        f.chain.push_back(c.compose_chain(piece));
    }
    return f;
}

SimplexMorphism SimplexMorphism::make(const FinCat& c, Simplex source, Simplex target, OrderMap map)
{
    if (map.source_dim() != source.dim() || !(apply_simplex_map(c, map, target) == source))
        fail(ErrorKind::InvalidSimplexMorphism, "(" + simplex_key(c, source) + ") is not (" +
                                                    simplex_key(c, target) + ") composed with the order map");
    return SimplexMorphism{std::move(source), std::move(target), std::move(map)};
}

SimplexMorphism SimplexMorphism::along(const FinCat& c, const OrderMap& sigma, const Simplex& g)
{
    return SimplexMorphism{apply_simplex_map(c, sigma, g), g, sigma};
}

namespace {

std::vector<Simplex> build_level(const FinCat& c, const std::vector<Simplex>& previous, std::size_t n)
{
    std::vector<Simplex> out;
    if (n == 0) {
        for (std::size_t x = 0; x < c.object_count(); ++x)
            out.push_back(vertex_simplex(x));
        return out;
    }
    if (n == 1) {
        for (std::size_t m = 0; m < c.morphism_count(); ++m)
            out.push_back(Simplex{{m}, c.dst(m)});
        return out;
    }
    for (const auto& s : previous) {
        std::size_t tail = c.src(s.chain.back());
        auto into = c.morphisms_into(tail);
        std::sort(into.begin(), into.end());
        for (std::size_t m : into) {
            Simplex t = s;
            t.chain.push_back(m);
            out.push_back(std::move(t));
        }
    }
    return out;
}

} // namespace

const std::vector<Simplex>& nerve_level(const FinCat& c, std::size_t n)
{
    auto& cache = c.nerve_cache();
    std::lock_guard lock(cache.mutex);
    while (cache.levels.size() <= n) {
        std::size_t k = cache.levels.size();
        static const std::vector<Simplex> none;
        const auto& prev = k == 0 ? none : *cache.levels.back();
        cache.levels.push_back(std::make_unique<const std::vector<Simplex>>(build_level(c, prev, k)));
    }
    return *cache.levels[n];
}

const std::vector<Simplex>& nondegenerate_level(const FinCat& c, std::size_t n)
{
    const auto& all = nerve_level(c, n);
    auto& cache = c.nerve_cache();
    std::lock_guard lock(cache.mutex);
    if (cache.nondegenerate.size() <= n)
        cache.nondegenerate.resize(n + 1);
    if (!cache.nondegenerate[n]) {
        std::vector<Simplex> out;
        for (const auto& s : all)
            if (!is_degenerate(c, s))
                out.push_back(s);
        cache.nondegenerate[n] = std::make_unique<const std::vector<Simplex>>(std::move(out));
    }
    return *cache.nondegenerate[n];
}

std::size_t simplex_index(const FinCat& c, const Simplex& s)
{
    const auto& level = nerve_level(c, s.dim());
    auto it = std::lower_bound(level.begin(), level.end(), s);
    if (it == level.end() || !(*it == s))
        fail(ErrorKind::InvalidSimplexMorphism, "(" + simplex_key(c, s) + ") is not a simplex of the nerve");
    return static_cast<std::size_t>(it - level.begin());
}

bool is_degenerate(const FinCat& c, const Simplex& s)
{
    for (std::size_t m : s.chain)
        if (c.is_identity(m))
            return true;
    return false;
}

Simplex delta_u(const FinFunctor& u, const Simplex& s)
{
    Simplex t;
    t.vertex = u.object(s.vertex);
    t.chain.reserve(s.chain.size());
    for (std::size_t m : s.chain)
        t.chain.push_back(u.morphism(m));
    return t;
}

std::size_t nu_object(const FinCat& c, const Simplex& s)
{
    if (s.chain.empty())
        return c.identity(s.vertex);
    return c.compose_chain(s.chain);
}

FactorizationPair nu_morphism(const FinCat& c, const SimplexMorphism& sigma)
{
    const Simplex& g = sigma.target;
    const std::size_t n = g.dim();
    const std::size_t first = sigma.map.values.front();
    const std::size_t last = sigma.map.values.back();
    FactorizationPair p;
    // α = g_{σ(m)+1}∘...∘g_n : D_n -> D_{σ(m)}
    if (last == n)
        p.alpha = c.identity(g.object(c, n));
    else
        p.alpha = c.compose_chain(std::vector<std::size_t>(g.chain.begin() + static_cast<std::ptrdiff_t>(last), g.chain.end()));
    // β = g_1∘...∘g_{σ(0)} : D_{σ(0)} -> D_0
    if (first == 0)
        p.beta = c.identity(g.vertex);
    else
        p.beta = c.compose_chain(
            std::vector<std::size_t>(g.chain.begin(), g.chain.begin() + static_cast<std::ptrdiff_t>(first)));
    return p;
}

std::size_t nu_morphism_index(const FactorizationCategory& fc, const SimplexMorphism& sigma)
{
    const FinCat& c = *fc.base;
    auto p = nu_morphism(c, sigma);
    auto m = fc.find(nu_object(c, sigma.source), p.alpha, p.beta);
    ensure(m.has_value(), "ν(σ) is not a morphism of the factorization category");
    return *m;
}

} // namespace catcoh
