#include "catcoh/fincat.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace catcoh {

namespace {

constexpr std::size_t kUndefined = static_cast<std::size_t>(-1);

std::string triple_text(const FinCat& c, std::size_t h, std::size_t g, std::size_t f)
{
    return "(" + c.morphism_name(h) + ", " + c.morphism_name(g) + ", " + c.morphism_name(f) + ")";
}

} // namespace

void fill_identity_compositions(RawCategory& raw)
{
    if (raw.identities.size() != raw.objects.size())
        fail(ErrorKind::MissingIdentity, "identity list does not cover every object");
    std::set<std::pair<std::size_t, std::size_t>> present;
    for (const auto& t : raw.compose)
        present.emplace(t[0], t[1]);
    for (std::size_t f = 0; f < raw.morphisms.size(); ++f) {
        std::size_t left = raw.identities.at(raw.morphisms[f].dst);
        std::size_t right = raw.identities.at(raw.morphisms[f].src);
        if (present.emplace(left, f).second)
            raw.compose.push_back({left, f, f});
        if (present.emplace(f, right).second)
            raw.compose.push_back({f, right, f});
    }
}

FinCat FinCat::validate(RawCategory raw)
{
    FinCat c;
    const std::size_t n_obj = raw.objects.size();
    const std::size_t n_mor = raw.morphisms.size();
    for (const auto& m : raw.morphisms)
        if (m.src >= n_obj || m.dst >= n_obj)
            fail(ErrorKind::IndexOutOfRange, "morphism '" + m.name + "' has an endpoint outside the object table");

    c.objects_ = std::move(raw.objects);
    c.morphisms_ = std::move(raw.morphisms);
    c.hom_.assign(n_obj * n_obj, {});
    c.out_.assign(n_obj, {});
    c.in_.assign(n_obj, {});
    c.out_position_.assign(n_mor, 0);
    for (std::size_t m = 0; m < n_mor; ++m) {
        const auto& info = c.morphisms_[m];
        c.hom_[info.src * n_obj + info.dst].push_back(m);
        c.out_position_[m] = c.out_[info.src].size();
        c.out_[info.src].push_back(m);
        c.in_[info.dst].push_back(m);
    }

    c.compose_.resize(n_mor);
    for (std::size_t f = 0; f < n_mor; ++f)
        c.compose_[f].assign(c.out_[c.morphisms_[f].dst].size(), kUndefined);

    for (const auto& [g, f, gf] : raw.compose) {
        if (g >= n_mor || f >= n_mor || gf >= n_mor)
            fail(ErrorKind::IndexOutOfRange, "composition triple refers to a missing morphism");
        if (c.dst(f) != c.src(g))
            fail(ErrorKind::CompositionDomainMismatch, "composite given for non-composable pair (" + c.morphism_name(g) +
                                                           ", " + c.morphism_name(f) + ")");
        if (c.src(gf) != c.src(f) || c.dst(gf) != c.dst(g))
            fail(ErrorKind::CompositionDomainMismatch, "composite " + c.morphism_name(g) + "∘" + c.morphism_name(f) +
                                                           " = " + c.morphism_name(gf) + " has the wrong endpoints");
        auto& slot = c.compose_[f][c.out_position_[g]];
        if (slot != kUndefined && slot != gf)
            fail(ErrorKind::CompositionDomainMismatch, "conflicting composites for (" + c.morphism_name(g) + ", " +
                                                           c.morphism_name(f) + ")");
        slot = gf;
    }
    for (std::size_t f = 0; f < n_mor; ++f)
        for (std::size_t k = 0; k < c.compose_[f].size(); ++k)
            if (c.compose_[f][k] == kUndefined)
                fail(ErrorKind::CompositionDomainMismatch, "no composite for composable pair (" +
                                                               c.morphism_name(c.out_[c.dst(f)][k]) + ", " +
                                                               c.morphism_name(f) + ")");

    auto acts_as_identity = [&c](std::size_t e) {
        std::size_t x = c.src(e);
        if (c.dst(e) != x)
            return false;
        for (std::size_t f : c.in_[x])
            if (*c.try_compose(e, f) != f)
                return false;
        for (std::size_t g : c.out_[x])
            if (*c.try_compose(g, e) != g)
                return false;
        return true;
    };

    c.identity_.assign(n_obj, kUndefined);
    if (!raw.identities.empty()) {
        if (raw.identities.size() != n_obj)
            fail(ErrorKind::MissingIdentity, "identity list does not cover every object");
        for (std::size_t x = 0; x < n_obj; ++x) {
            std::size_t e = raw.identities[x];
            if (e >= n_mor || c.src(e) != x || c.dst(e) != x || !acts_as_identity(e))
                fail(ErrorKind::MissingIdentity, "declared identity of '" + c.objects_[x] + "' violates the unit laws");
            c.identity_[x] = e;
        }
    } else {
        for (std::size_t x = 0; x < n_obj; ++x) {
            for (std::size_t e : c.hom(x, x))
                if (acts_as_identity(e)) {
                    c.identity_[x] = e;
                    break;
                }
            if (c.identity_[x] == kUndefined)
                fail(ErrorKind::MissingIdentity, "object '" + c.objects_[x] + "' has no endomorphism acting as identity");
        }
    }

    for (std::size_t f = 0; f < n_mor; ++f)
        for (std::size_t g : c.out_[c.dst(f)]) {
            std::size_t gf = c.compose(g, f);
            for (std::size_t h : c.out_[c.dst(g)])
                if (c.compose(h, gf) != c.compose(c.compose(h, g), f))
                    fail(ErrorKind::NonAssociative, "triple " + triple_text(c, h, g, f));
        }

    c.nerve_cache_ = detail::make_nerve_cache();
    return c;
}

std::optional<std::size_t> FinCat::try_compose(std::size_t g, std::size_t f) const
{
    if (morphisms_.at(f).dst != morphisms_.at(g).src)
        return std::nullopt;
    return compose_[f][out_position_[g]];
}

std::size_t FinCat::compose(std::size_t g, std::size_t f) const
{
    auto r = try_compose(g, f);
    if (!r)
        fail(ErrorKind::CompositionDomainMismatch, "cannot compose " + morphism_name(g) + " after " + morphism_name(f));
    return *r;
}

std::size_t FinCat::compose_chain(const std::vector<std::size_t>& chain) const
{
    ensure(!chain.empty(), "compose_chain on an empty chain");
    std::size_t acc = chain.back();
    for (std::size_t k = chain.size() - 1; k-- > 0;)
        acc = compose(chain[k], acc);
    return acc;
}

std::optional<std::size_t> FinCat::find_object(const std::string& name) const
{
    auto it = std::find(objects_.begin(), objects_.end(), name);
    if (it == objects_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - objects_.begin());
}

std::optional<std::size_t> FinCat::find_morphism(const std::string& name) const
{
    for (std::size_t m = 0; m < morphisms_.size(); ++m)
        if (morphisms_[m].name == name)
            return m;
    return std::nullopt;
}

bool FinCat::is_thin() const
{
    for (const auto& h : hom_)
        if (h.size() > 1)
            return false;
    return true;
}

std::optional<std::size_t> FinCat::inverse(std::size_t m) const
{
    for (std::size_t k : hom(dst(m), src(m)))
        if (compose(k, m) == identity(src(m)) && compose(m, k) == identity(dst(m)))
            return k;
    return std::nullopt;
}

bool FinCat::is_groupoid() const
{
    for (std::size_t m = 0; m < morphisms_.size(); ++m)
        if (!inverse(m))
            return false;
    return true;
}

RawCategory FinCat::raw() const
{
    RawCategory r;
    r.objects = objects_;
    r.morphisms = morphisms_;
    r.identities = identity_;
    for (std::size_t f = 0; f < morphisms_.size(); ++f)
        for (std::size_t g : out_[dst(f)])
            r.compose.push_back({g, f, compose(g, f)});
    return r;
}

bool operator==(const FinCat& a, const FinCat& b)
{
    if (a.objects_ != b.objects_ || a.identity_ != b.identity_ || a.morphisms_.size() != b.morphisms_.size())
        return false;
    for (std::size_t m = 0; m < a.morphisms_.size(); ++m) {
        const auto &x = a.morphisms_[m], &y = b.morphisms_[m];
        if (x.name != y.name || x.src != y.src || x.dst != y.dst)
            return false;
    }
    return a.compose_ == b.compose_ && a.out_ == b.out_;
}

FinCat terminal_category()
{
    RawCategory r;
    r.objects = {"*"};
    r.morphisms = {{"id_*", 0, 0}};
    r.compose = {{0, 0, 0}};
    r.identities = {0};
    return FinCat::validate(std::move(r));
}

FinCat empty_category()
{
    return FinCat::validate(RawCategory{});
}

FinCat interval_category(std::size_t n)
{
    std::vector<std::string> objects;
    std::vector<std::pair<std::string, std::string>> relations;
    for (std::size_t i = 0; i <= n; ++i) {
        objects.push_back(std::to_string(i));
        if (i > 0)
            relations.emplace_back(std::to_string(i - 1), std::to_string(i));
    }
    return poset_category(objects, relations);
}

FinCat poset_category(const std::vector<std::string>& objects,
                      const std::vector<std::pair<std::string, std::string>>& relations)
{
    const std::size_t n = objects.size();
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i)
        if (!index.emplace(objects[i], i).second)
            fail(ErrorKind::NotAPartialOrder, "duplicate object '" + objects[i] + "'");
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        le[i][i] = true;
    for (const auto& [a, b] : relations) {
        auto ia = index.find(a), ib = index.find(b);
        if (ia == index.end() || ib == index.end())
            fail(ErrorKind::NotAPartialOrder, "relation " + a + " < " + b + " names an unknown object");
        le[ia->second][ib->second] = true;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (le[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (le[k][j])
                        le[i][j] = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (le[i][j] && le[j][i])
                fail(ErrorKind::NotAPartialOrder, "cycle through '" + objects[i] + "' and '" + objects[j] + "'");

    RawCategory r;
    r.objects = objects;
    r.identities.assign(n, 0);
    std::vector<std::vector<std::size_t>> mor(n, std::vector<std::size_t>(n, kUndefined));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (le[i][j]) {
                mor[i][j] = r.morphisms.size();
                r.morphisms.push_back({i == j ? "id_" + objects[i] : objects[i] + "<" + objects[j], i, j});
                if (i == j)
                    r.identities[i] = mor[i][j];
            }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (le[i][j])
                for (std::size_t k = 0; k < n; ++k)
                    if (le[j][k])
                        r.compose.push_back({mor[j][k], mor[i][j], mor[i][k]});
    return FinCat::validate(std::move(r));
}

FinCat monoid_category(const std::vector<std::string>& elements, const std::vector<std::vector<std::size_t>>& table)
{
    const std::size_t n = elements.size();
    if (n == 0)
        fail(ErrorKind::NotAMonoid, "a monoid needs at least its unit");
    if (table.size() != n)
        fail(ErrorKind::NotAMonoid, "table has the wrong number of rows");
    for (const auto& row : table) {
        if (row.size() != n)
            fail(ErrorKind::NotAMonoid, "table has a row of the wrong length");
        for (std::size_t v : row)
            if (v >= n)
                fail(ErrorKind::NotAMonoid, "table entry outside the element set");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    fail(ErrorKind::NotAMonoid, "not associative at (" + elements[a] + ", " + elements[b] + ", " +
                                                    elements[c] + ")");
    std::optional<std::size_t> unit;
    for (std::size_t e = 0; e < n && !unit; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a)
            ok = table[e][a] == a && table[a][e] == a;
        if (ok)
            unit = e;
    }
    if (!unit)
        fail(ErrorKind::NotAMonoid, "no unit element");

    RawCategory r;
    r.objects = {"*"};
    for (const auto& e : elements)
        r.morphisms.push_back({e, 0, 0});
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t f = 0; f < n; ++f)
            r.compose.push_back({g, f, table[g][f]});
    r.identities = {*unit};
    return FinCat::validate(std::move(r));
}

FinCat cyclic_group_category(std::size_t order)
{
    if (order == 0)
        fail(ErrorKind::NotAMonoid, "cyclic group of order 0");
    std::vector<std::string> names;
    std::vector<std::vector<std::size_t>> table(order, std::vector<std::size_t>(order));
    for (std::size_t k = 0; k < order; ++k) {
        names.push_back(k == 0 ? "1" : (k == 1 ? "t" : "t" + std::to_string(k)));
        for (std::size_t l = 0; l < order; ++l)
            table[k][l] = (k + l) % order;
    }
    return monoid_category(names, table);
}

FinCat opposite_category(const FinCat& c)
{
    RawCategory r;
    for (std::size_t x = 0; x < c.object_count(); ++x) {
        r.objects.push_back(c.object_name(x));
        r.identities.push_back(c.identity(x));
    }
    for (std::size_t m = 0; m < c.morphism_count(); ++m)
        r.morphisms.push_back({c.morphism_name(m), c.dst(m), c.src(m)});
    for (std::size_t f = 0; f < c.morphism_count(); ++f)
        for (std::size_t g : c.morphisms_from(c.dst(f)))
            r.compose.push_back({f, g, c.compose(g, f)});
    return FinCat::validate(std::move(r));
}

FinCat product_category(const FinCat& c, const FinCat& d)
{
    RawCategory r;
    const std::size_t od = d.object_count(), md = d.morphism_count();
    for (std::size_t x = 0; x < c.object_count(); ++x)
        for (std::size_t y = 0; y < od; ++y) {
            r.objects.push_back("(" + c.object_name(x) + "," + d.object_name(y) + ")");
            r.identities.push_back(product_index(c.identity(x), d.identity(y), md));
        }
    for (std::size_t f = 0; f < c.morphism_count(); ++f)
        for (std::size_t g = 0; g < md; ++g)
            r.morphisms.push_back({"(" + c.morphism_name(f) + "," + d.morphism_name(g) + ")",
                                   product_index(c.src(f), d.src(g), od), product_index(c.dst(f), d.dst(g), od)});
    for (std::size_t f = 0; f < c.morphism_count(); ++f)
        for (std::size_t f2 : c.morphisms_from(c.dst(f))) {
            std::size_t ff = c.compose(f2, f);
            for (std::size_t g = 0; g < md; ++g)
                for (std::size_t g2 : d.morphisms_from(d.dst(g)))
                    r.compose.push_back({product_index(f2, g2, md), product_index(f, g, md),
                                         product_index(ff, d.compose(g2, g), md)});
        }
    return FinCat::validate(std::move(r));
}

FinCat coproduct_category(const FinCat& c, const FinCat& d)
{
    RawCategory r;
    const std::size_t oc = c.object_count(), mc = c.morphism_count();
    for (std::size_t x = 0; x < oc; ++x) {
        r.objects.push_back("0|" + c.object_name(x));
        r.identities.push_back(c.identity(x));
    }
    for (std::size_t y = 0; y < d.object_count(); ++y) {
        r.objects.push_back("1|" + d.object_name(y));
        r.identities.push_back(mc + d.identity(y));
    }
    for (std::size_t m = 0; m < mc; ++m)
        r.morphisms.push_back({"0|" + c.morphism_name(m), c.src(m), c.dst(m)});
    for (std::size_t m = 0; m < d.morphism_count(); ++m)
        r.morphisms.push_back({"1|" + d.morphism_name(m), oc + d.src(m), oc + d.dst(m)});
    for (std::size_t f = 0; f < mc; ++f)
        for (std::size_t g : c.morphisms_from(c.dst(f)))
            r.compose.push_back({g, f, c.compose(g, f)});
    for (std::size_t f = 0; f < d.morphism_count(); ++f)
        for (std::size_t g : d.morphisms_from(d.dst(f)))
            r.compose.push_back({mc + g, mc + f, mc + d.compose(g, f)});
    return FinCat::validate(std::move(r));
}

FinFunctor FinFunctor::make(CatPtr source, CatPtr target, std::vector<std::size_t> object_map,
                            std::vector<std::size_t> morphism_map)
{
    if (!source || !target)
        fail(ErrorKind::NotAFunctor, "null category");
    const FinCat& s = *source;
    const FinCat& t = *target;
    if (object_map.size() != s.object_count() || morphism_map.size() != s.morphism_count())
        fail(ErrorKind::NotAFunctor, "object or morphism map has the wrong length");
    for (std::size_t x : object_map)
        if (x >= t.object_count())
            fail(ErrorKind::NotAFunctor, "object map leaves the target");
    for (std::size_t m = 0; m < s.morphism_count(); ++m) {
        std::size_t fm = morphism_map[m];
        if (fm >= t.morphism_count())
            fail(ErrorKind::NotAFunctor, "morphism map leaves the target");
        if (t.src(fm) != object_map[s.src(m)] || t.dst(fm) != object_map[s.dst(m)])
            fail(ErrorKind::NotAFunctor, "image of '" + s.morphism_name(m) + "' has the wrong endpoints");
    }
    for (std::size_t x = 0; x < s.object_count(); ++x)
        if (morphism_map[s.identity(x)] != t.identity(object_map[x]))
            fail(ErrorKind::NotAFunctor, "identity of '" + s.object_name(x) + "' is not preserved");
    for (std::size_t f = 0; f < s.morphism_count(); ++f)
        for (std::size_t g : s.morphisms_from(s.dst(f)))
            if (morphism_map[s.compose(g, f)] != t.compose(morphism_map[g], morphism_map[f]))
                fail(ErrorKind::NotAFunctor, "composite " + s.morphism_name(g) + "∘" + s.morphism_name(f) +
                                                 " is not preserved");
    FinFunctor u;
    u.source_ = std::move(source);
    u.target_ = std::move(target);
    u.object_map_ = std::move(object_map);
    u.morphism_map_ = std::move(morphism_map);
    return u;
}

FinFunctor FinFunctor::from_object_map(CatPtr source, CatPtr target, std::vector<std::size_t> object_map)
{
    if (object_map.size() != source->object_count())
        fail(ErrorKind::NotAFunctor, "object map has the wrong length");
    std::vector<std::size_t> mor(source->morphism_count());
    for (std::size_t m = 0; m < source->morphism_count(); ++m) {
        const auto& h = target->hom(object_map.at(source->src(m)), object_map.at(source->dst(m)));
        if (h.size() != 1)
            fail(ErrorKind::NotAFunctor, "morphism image of '" + source->morphism_name(m) + "' is not forced by objects");
        mor[m] = h.front();
    }
    return make(std::move(source), std::move(target), std::move(object_map), std::move(mor));
}

FinFunctor FinFunctor::identity(CatPtr c)
{
    std::vector<std::size_t> obj(c->object_count()), mor(c->morphism_count());
    for (std::size_t i = 0; i < obj.size(); ++i)
        obj[i] = i;
    for (std::size_t i = 0; i < mor.size(); ++i)
        mor[i] = i;
    return make(c, c, std::move(obj), std::move(mor));
}

FinFunctor FinFunctor::constant(CatPtr source, CatPtr target, std::size_t object)
{
    std::vector<std::size_t> obj(source->object_count(), object);
    std::vector<std::size_t> mor(source->morphism_count(), target->identity(object));
    return make(std::move(source), std::move(target), std::move(obj), std::move(mor));
}

FinFunctor FinFunctor::compose(const FinFunctor& g, const FinFunctor& f)
{
    if (f.target_.get() != g.source_.get() && !(*f.target_ == *g.source_))
        fail(ErrorKind::NotAFunctor, "functors are not composable");
    std::vector<std::size_t> obj(f.object_map_.size()), mor(f.morphism_map_.size());
    for (std::size_t i = 0; i < obj.size(); ++i)
        obj[i] = g.object(f.object(i));
    for (std::size_t i = 0; i < mor.size(); ++i)
        mor[i] = g.morphism(f.morphism(i));
    FinFunctor u;
    u.source_ = f.source_;
    u.target_ = g.target_;
    u.object_map_ = std::move(obj);
    u.morphism_map_ = std::move(mor);
    return u;
}

FinFunctor FinFunctor::opposite(CatPtr source_op, CatPtr target_op) const
{
    return make(std::move(source_op), std::move(target_op), object_map_, morphism_map_);
}

FinFunctor product_projection(CatPtr product, CatPtr left, CatPtr right, int which)
{
    const std::size_t od = right->object_count(), md = right->morphism_count();
    std::vector<std::size_t> obj(product->object_count()), mor(product->morphism_count());
    for (std::size_t i = 0; i < obj.size(); ++i)
        obj[i] = which == 0 ? i / od : i % od;
    for (std::size_t i = 0; i < mor.size(); ++i)
        mor[i] = which == 0 ? i / md : i % md;
    return FinFunctor::make(std::move(product), which == 0 ? std::move(left) : std::move(right), std::move(obj),
                            std::move(mor));
}

FinFunctor product_functor(const FinFunctor& u, const FinFunctor& v, CatPtr source_product, CatPtr target_product)
{
    const std::size_t so = v.source()->object_count(), sm = v.source()->morphism_count();
    const std::size_t to = v.target()->object_count(), tm = v.target()->morphism_count();
    std::vector<std::size_t> obj(source_product->object_count()), mor(source_product->morphism_count());
    for (std::size_t i = 0; i < obj.size(); ++i)
        obj[i] = product_index(u.object(i / so), v.object(i % so), to);
    for (std::size_t i = 0; i < mor.size(); ++i)
        mor[i] = product_index(u.morphism(i / sm), v.morphism(i % sm), tm);
    return FinFunctor::make(std::move(source_product), std::move(target_product), std::move(obj), std::move(mor));
}

} // namespace catcoh
