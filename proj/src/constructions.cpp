#include "catcoh/constructions.hpp"

#include <functional>
#include <set>

namespace catcoh {

std::optional<std::size_t> FactorizationCategory::find(std::size_t f, std::size_t alpha, std::size_t beta) const
{
    auto it = index.find({f, alpha, beta});
    if (it == index.end())
        return std::nullopt;
    return it->second;
}

FactorizationCategory factorization_category(CatPtr c)
{
    const FinCat& C = *c;
    FactorizationCategory fc;
    fc.base = c;

    RawCategory r;
    r.identities.resize(C.morphism_count());
    for (std::size_t f = 0; f < C.morphism_count(); ++f)
        r.objects.push_back(C.morphism_name(f));
    for (std::size_t f = 0; f < C.morphism_count(); ++f)
        for (std::size_t alpha : C.morphisms_into(C.src(f)))
            for (std::size_t beta : C.morphisms_from(C.dst(f))) {
                std::size_t target = C.compose(beta, C.compose(f, alpha));
                std::size_t idx = r.morphisms.size();
                r.morphisms.push_back(
                    {"(" + C.morphism_name(alpha) + "," + C.morphism_name(beta) + "):" + C.morphism_name(f), f, target});
                fc.pairs.push_back({f, alpha, beta});
                fc.index.emplace(std::make_tuple(f, alpha, beta), idx);
                if (C.is_identity(alpha) && C.is_identity(beta))
                    r.identities[f] = idx;
            }
    // (alpha', beta')∘(alpha, beta) = (alpha∘alpha', beta'∘beta)
    for (std::size_t m = 0; m < fc.pairs.size(); ++m) {
        const auto& p = fc.pairs[m];
        std::size_t mid = r.morphisms[m].dst;
        for (std::size_t alpha2 : C.morphisms_into(C.src(mid)))
            for (std::size_t beta2 : C.morphisms_from(C.dst(mid))) {
                std::size_t m2 = fc.index.at({mid, alpha2, beta2});
                std::size_t comp = fc.index.at({p.source, C.compose(p.alpha, alpha2), C.compose(beta2, p.beta)});
                r.compose.push_back({m2, m, comp});
            }
    }
    fc.category = share(FinCat::validate(std::move(r)));

    auto cop = share(opposite_category(C));
    fc.twisted = share(product_category(*cop, C));
    const std::size_t oc = C.object_count(), mc = C.morphism_count();
    std::vector<std::size_t> obj(C.morphism_count()), mor(fc.pairs.size());
    for (std::size_t f = 0; f < mc; ++f)
        obj[f] = product_index(C.src(f), C.dst(f), oc);
    for (std::size_t m = 0; m < fc.pairs.size(); ++m)
        mor[m] = product_index(fc.pairs[m].alpha, fc.pairs[m].beta, mc);
    fc.forget = FinFunctor::make(fc.category, fc.twisted, std::move(obj), std::move(mor));
    return fc;
}

FinFunctor factorization_functor(const FinFunctor& u, const FactorizationCategory& fe, const FactorizationCategory& fb)
{
    std::vector<std::size_t> obj(fe.category->object_count()), mor(fe.pairs.size());
    for (std::size_t f = 0; f < obj.size(); ++f)
        obj[f] = u.morphism(f);
    for (std::size_t m = 0; m < mor.size(); ++m) {
        const auto& p = fe.pairs[m];
        auto img = fb.find(u.morphism(p.source), u.morphism(p.alpha), u.morphism(p.beta));
        ensure(img.has_value(), "image pair missing from F(B)");
        mor[m] = *img;
    }
    return FinFunctor::make(fe.category, fb.category, std::move(obj), std::move(mor));
}

std::optional<std::size_t> CommaCategory::find_object(std::size_t e, std::size_t structure) const
{
    for (std::size_t i = 0; i < objects.size(); ++i)
        if (objects[i].first == e && objects[i].second == structure)
            return i;
    return std::nullopt;
}

namespace {

CommaCategory build_comma(const FinFunctor& u, std::size_t b, CommaCategory::Side side)
{
    const FinCat& E = *u.source();
    const FinCat& B = *u.target();
    if (b >= B.object_count())
        fail(ErrorKind::ObjectNotInTarget, "object index " + std::to_string(b) + " is not in the target category");
    const bool under = side == CommaCategory::Side::Under;

    CommaCategory cc;
    cc.side = side;
    cc.base_object = b;
    RawCategory r;
    for (std::size_t e = 0; e < E.object_count(); ++e) {
        const auto& structures = under ? B.hom(b, u.object(e)) : B.hom(u.object(e), b);
        for (std::size_t s : structures) {
            cc.objects.emplace_back(e, s);
            r.objects.push_back("(" + E.object_name(e) + "," + B.morphism_name(s) + ")");
        }
    }
    std::vector<std::vector<std::size_t>> by_e(E.object_count());
    for (std::size_t i = 0; i < cc.objects.size(); ++i)
        by_e[cc.objects[i].first].push_back(i);

    // morphisms (e, s) -> (e', s') are m: e -> e' with u(m)∘phi = phi' (under)
    // or psi'∘u(m) = psi (over)
    std::vector<std::size_t> underlying;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index; // (source comma object, m)
    r.identities.resize(cc.objects.size());
    for (std::size_t i = 0; i < cc.objects.size(); ++i) {
        auto [e, s] = cc.objects[i];
        for (std::size_t m : E.morphisms_from(e)) {
            std::size_t e2 = E.dst(m);
            for (std::size_t j : by_e[e2]) {
                std::size_t s2 = cc.objects[j].second;
                bool ok = under ? B.compose(u.morphism(m), s) == s2 : B.compose(s2, u.morphism(m)) == s;
                if (!ok)
                    continue;
                std::size_t idx = r.morphisms.size();
                r.morphisms.push_back({E.morphism_name(m) + ":" + r.objects[i], i, j});
                underlying.push_back(m);
                index.emplace(std::make_pair(i, m), idx);
                if (E.is_identity(m))
                    r.identities[i] = idx;
            }
        }
    }
    for (std::size_t f = 0; f < r.morphisms.size(); ++f) {
        std::size_t mid = r.morphisms[f].dst;
        for (std::size_t g = 0; g < r.morphisms.size(); ++g) {
            if (r.morphisms[g].src != mid)
                continue;
            std::size_t comp = index.at({r.morphisms[f].src, E.compose(underlying[g], underlying[f])});
            r.compose.push_back({g, f, comp});
        }
    }
    cc.category = share(FinCat::validate(std::move(r)));

    std::vector<std::size_t> obj(cc.objects.size());
    for (std::size_t i = 0; i < obj.size(); ++i)
        obj[i] = cc.objects[i].first;
    cc.forget = FinFunctor::make(cc.category, u.source(), std::move(obj), std::move(underlying));
    return cc;
}

} // namespace

CommaCategory comma_under(const FinFunctor& u, std::size_t b)
{
    return build_comma(u, b, CommaCategory::Side::Under);
}

CommaCategory comma_over(const FinFunctor& u, std::size_t b)
{
    return build_comma(u, b, CommaCategory::Side::Over);
}

namespace {

FinFunctor comma_reindex(const CommaCategory& from, const CommaCategory& to,
                         const std::function<std::size_t(std::size_t)>& restructure)
{
    std::vector<std::size_t> obj(from.objects.size());
    for (std::size_t i = 0; i < obj.size(); ++i) {
        auto [e, s] = from.objects[i];
        auto j = to.find_object(e, restructure(s));
        ensure(j.has_value(), "reindexed comma object missing");
        obj[i] = *j;
    }
    const FinCat& src = *from.category;
    const FinCat& dst = *to.category;
    std::vector<std::size_t> mor(src.morphism_count());
    for (std::size_t m = 0; m < mor.size(); ++m) {
        std::size_t under = from.forget.morphism(m);
        std::size_t found = static_cast<std::size_t>(-1);
        for (std::size_t k : dst.hom(obj[src.src(m)], obj[src.dst(m)]))
            if (to.forget.morphism(k) == under) {
                found = k;
                break;
            }
        ensure(found != static_cast<std::size_t>(-1), "reindexed comma morphism missing");
        mor[m] = found;
    }
    return FinFunctor::make(from.category, to.category, std::move(obj), std::move(mor));
}

} // namespace

FinFunctor comma_precomposition(const FinFunctor& u, std::size_t beta, const CommaCategory& under_b,
                                const CommaCategory& under_b_prime)
{
    const FinCat& B = *u.target();
    if (B.src(beta) != under_b.base_object || B.dst(beta) != under_b_prime.base_object)
        fail(ErrorKind::ObjectNotInTarget, "beta does not run between the comma base objects");
    return comma_reindex(under_b_prime, under_b, [&](std::size_t phi) { return B.compose(phi, beta); });
}

FinFunctor comma_postcomposition(const FinFunctor& u, std::size_t beta, const CommaCategory& over_b,
                                 const CommaCategory& over_b_prime)
{
    const FinCat& B = *u.target();
    if (B.src(beta) != over_b.base_object || B.dst(beta) != over_b_prime.base_object)
        fail(ErrorKind::ObjectNotInTarget, "beta does not run between the comma base objects");
    return comma_reindex(over_b, over_b_prime, [&](std::size_t psi) { return B.compose(beta, psi); });
}

FiberCategory fiber_category(const FinFunctor& u, std::size_t b)
{
    const FinCat& E = *u.source();
    const FinCat& B = *u.target();
    if (b >= B.object_count())
        fail(ErrorKind::ObjectNotInTarget, "object index " + std::to_string(b) + " is not in the base");
    std::vector<std::size_t> obj_of, mor_of;
    std::vector<std::size_t> local(E.object_count(), static_cast<std::size_t>(-1));
    RawCategory r;
    for (std::size_t e = 0; e < E.object_count(); ++e)
        if (u.object(e) == b) {
            local[e] = obj_of.size();
            obj_of.push_back(e);
            r.objects.push_back(E.object_name(e));
        }
    std::vector<std::size_t> local_mor(E.morphism_count(), static_cast<std::size_t>(-1));
    for (std::size_t m = 0; m < E.morphism_count(); ++m)
        if (u.morphism(m) == B.identity(b) && local[E.src(m)] != static_cast<std::size_t>(-1)) {
            local_mor[m] = mor_of.size();
            mor_of.push_back(m);
            r.morphisms.push_back({E.morphism_name(m), local[E.src(m)], local[E.dst(m)]});
        }
    for (std::size_t e : obj_of)
        r.identities.push_back(local_mor[E.identity(e)]);
    for (std::size_t f : mor_of)
        for (std::size_t g : mor_of)
            if (E.dst(f) == E.src(g))
                r.compose.push_back({local_mor[g], local_mor[f], local_mor[E.compose(g, f)]});
    FiberCategory fib;
    fib.base_object = b;
    fib.category = share(FinCat::validate(std::move(r)));
    fib.inclusion = FinFunctor::make(fib.category, u.source(), std::move(obj_of), std::move(mor_of));
    return fib;
}

FinFunctor fiber_to_comma(const FinFunctor& u, const FiberCategory& fiber, const CommaCategory& under_b)
{
    const FinCat& F = *fiber.category;
    const FinCat& K = *under_b.category;
    const std::size_t id_b = u.target()->identity(fiber.base_object);
    std::vector<std::size_t> obj(F.object_count());
    for (std::size_t x = 0; x < F.object_count(); ++x) {
        auto i = under_b.find_object(fiber.inclusion.object(x), id_b);
        ensure(i.has_value(), "fiber object missing from comma category");
        obj[x] = *i;
    }
    std::vector<std::size_t> mor(F.morphism_count());
    for (std::size_t m = 0; m < mor.size(); ++m) {
        std::size_t under = fiber.inclusion.morphism(m);
        std::optional<std::size_t> found;
        for (std::size_t k : K.hom(obj[F.src(m)], obj[F.dst(m)]))
            if (under_b.forget.morphism(k) == under)
                found = k;
        ensure(found.has_value(), "fiber morphism missing from comma category");
        mor[m] = *found;
    }
    return FinFunctor::make(fiber.category, under_b.category, std::move(obj), std::move(mor));
}

bool is_isomorphism(const FinFunctor& u)
{
    const FinCat& s = *u.source();
    const FinCat& t = *u.target();
    if (s.object_count() != t.object_count() || s.morphism_count() != t.morphism_count())
        return false;
    std::set<std::size_t> objs(u.object_map().begin(), u.object_map().end());
    std::set<std::size_t> mors(u.morphism_map().begin(), u.morphism_map().end());
    return objs.size() == s.object_count() && mors.size() == s.morphism_count();
}

} // namespace catcoh
