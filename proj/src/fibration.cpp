#include "catcoh/fibration.hpp"

namespace catcoh {

namespace {

bool same_category(const CatPtr& a, const CatPtr& b)
{
    return a == b || *a == *b;
}

} // namespace

void validate_strict_functor(const StrictFunctor& g)
{
    const FinCat& B = *g.base;
    if (g.fibers.size() != B.object_count() || g.transports.size() != B.morphism_count())
        fail(ErrorKind::NonStrictFunctor, "one fiber per object and one transport per morphism are required");
    for (std::size_t phi = 0; phi < B.morphism_count(); ++phi) {
        const FinFunctor& t = g.transports[phi];
        if (!same_category(t.source(), g.fibers[B.dst(phi)]) || !same_category(t.target(), g.fibers[B.src(phi)]))
            fail(ErrorKind::NonStrictFunctor, "transport along " + B.morphism_name(phi) +
                                                  " must run from the fiber over its target to the fiber over its source");
    }
    for (std::size_t b = 0; b < B.object_count(); ++b) {
        const FinFunctor& t = g.transports[B.identity(b)];
        for (std::size_t x = 0; x < t.source()->object_count(); ++x)
            if (t.object(x) != x)
                fail(ErrorKind::NonStrictFunctor, "transport along the identity of " + B.object_name(b) +
                                                      " moves objects");
        for (std::size_t m = 0; m < t.source()->morphism_count(); ++m)
            if (t.morphism(m) != m)
                fail(ErrorKind::NonStrictFunctor, "transport along the identity of " + B.object_name(b) +
                                                      " moves morphisms");
    }
    for (std::size_t phi = 0; phi < B.morphism_count(); ++phi)
        for (std::size_t psi : B.morphisms_from(B.dst(phi))) {
            // G(ψ∘φ) = G(φ)∘G(ψ)
            const FinFunctor& whole = g.transports[B.compose(psi, phi)];
            const FinFunctor& gphi = g.transports[phi];
            const FinFunctor& gpsi = g.transports[psi];
            bool ok = true;
            for (std::size_t x = 0; ok && x < whole.source()->object_count(); ++x)
                ok = whole.object(x) == gphi.object(gpsi.object(x));
            for (std::size_t m = 0; ok && m < whole.source()->morphism_count(); ++m)
                ok = whole.morphism(m) == gphi.morphism(gpsi.morphism(m));
            if (!ok)
                fail(ErrorKind::NonStrictFunctor, "G(" + B.morphism_name(psi) + "∘" + B.morphism_name(phi) +
                                                      ") differs from G(" + B.morphism_name(phi) + ")∘G(" +
                                                      B.morphism_name(psi) + ")");
        }
}

std::size_t SplitFibration::object_index(std::size_t b, std::size_t x) const
{
    return object_offsets.at(b) + x;
}

std::size_t SplitFibration::cleavage(std::size_t e_prime, std::size_t phi) const
{
    const FinCat& B = *g.base;
    auto [b2, x2] = objects.at(e_prime);
    if (B.dst(phi) != b2)
        fail(ErrorKind::ObjectNotInTarget, "the morphism does not end at the projection of the object");
    const FinFunctor& t = g.transports[phi];
    std::size_t x = t.object(x2);
    return morphism_lookup.at({phi, g.fibers[B.src(phi)]->identity(x), x2});
}

SplitFibration grothendieck_construction(StrictFunctor g)
{
    validate_strict_functor(g);
    const FinCat& B = *g.base;
    SplitFibration fib;
    RawCategory r;
    for (std::size_t b = 0; b < B.object_count(); ++b) {
        fib.object_offsets.push_back(r.objects.size());
        const FinCat& F = *g.fibers[b];
        for (std::size_t x = 0; x < F.object_count(); ++x) {
            fib.objects.emplace_back(b, x);
            r.objects.push_back("(" + B.object_name(b) + "," + F.object_name(x) + ")");
        }
    }
    fib.object_offsets.push_back(r.objects.size());

    struct Candidate {
        std::size_t phi, m, x_src, x_dst;
    };
    std::vector<Candidate> cands;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_count;
    for (std::size_t phi = 0; phi < B.morphism_count(); ++phi) {
        std::size_t b = B.src(phi), b2 = B.dst(phi);
        const FinCat& F = *g.fibers[b];
        const FinFunctor& t = g.transports[phi];
        for (std::size_t x = 0; x < F.object_count(); ++x)
            for (std::size_t x2 = 0; x2 < g.fibers[b2]->object_count(); ++x2)
                for (std::size_t m : F.hom(x, t.object(x2))) {
                    cands.push_back({phi, m, x, x2});
                    ++pair_count[{phi, m}];
                }
    }
    r.identities.resize(r.objects.size());
    for (const auto& c : cands) {
        std::size_t b = B.src(c.phi), b2 = B.dst(c.phi);
        std::string name = "(" + B.morphism_name(c.phi) + "," + g.fibers[b]->morphism_name(c.m) + ")";
        if (pair_count[{c.phi, c.m}] > 1)
            name += "@" + g.fibers[b2]->object_name(c.x_dst);
        std::size_t idx = r.morphisms.size();
        r.morphisms.push_back({name, fib.object_index(b, c.x_src), fib.object_index(b2, c.x_dst)});
        fib.morphisms.emplace_back(c.phi, c.m);
        fib.morphism_lookup.emplace(std::make_tuple(c.phi, c.m, c.x_dst), idx);
        if (B.is_identity(c.phi) && g.fibers[b]->is_identity(c.m) && c.x_src == c.x_dst)
            r.identities[fib.object_index(b, c.x_src)] = idx;
    }
    // (φ', m')∘(φ, m) = (φ'∘φ, G(φ)(m')∘m)
    for (std::size_t f = 0; f < cands.size(); ++f) {
        const auto& c1 = cands[f];
        std::size_t mid = r.morphisms[f].dst;
        for (std::size_t k = 0; k < cands.size(); ++k) {
            if (r.morphisms[k].src != mid)
                continue;
            const auto& c2 = cands[k];
            const FinCat& F = *g.fibers[B.src(c1.phi)];
            std::size_t m = F.compose(g.transports[c1.phi].morphism(c2.m), c1.m);
            std::size_t comp = fib.morphism_lookup.at({B.compose(c2.phi, c1.phi), m, c2.x_dst});
            r.compose.push_back({k, f, comp});
        }
    }
    fib.total = share(FinCat::validate(std::move(r)));
    std::vector<std::size_t> obj, mor;
    for (const auto& [b, x] : fib.objects)
        obj.push_back(b);
    for (const auto& [phi, m] : fib.morphisms)
        mor.push_back(phi);
    fib.projection = FinFunctor::make(fib.total, g.base, std::move(obj), std::move(mor));
    fib.g = std::move(g);
    return fib;
}

bool is_cartesian(const FinFunctor& u, std::size_t lambda)
{
    const FinCat& E = *u.source();
    const FinCat& B = *u.target();
    const std::size_t e = E.src(lambda), e2 = E.dst(lambda);
    const std::size_t phi = u.morphism(lambda);
    for (std::size_t mu : E.morphisms_into(e2)) {
        std::size_t e3 = E.src(mu);
        for (std::size_t psi : B.hom(u.object(e3), u.object(e))) {
            if (B.compose(phi, psi) != u.morphism(mu))
                continue;
            std::size_t factorizations = 0;
            for (std::size_t nu : E.hom(e3, e))
                if (u.morphism(nu) == psi && E.compose(lambda, nu) == mu)
                    ++factorizations;
            if (factorizations != 1)
                return false;
        }
    }
    return true;
}

FibrationCertificate is_grothendieck_fibration(const FinFunctor& u)
{
    const FinCat& E = *u.source();
    const FinCat& B = *u.target();
    FibrationCertificate cert;
    for (std::size_t e2 = 0; e2 < E.object_count(); ++e2)
        for (std::size_t phi : B.morphisms_into(u.object(e2))) {
            std::optional<std::size_t> found;
            for (std::size_t lambda : E.morphisms_into(e2))
                if (u.morphism(lambda) == phi && is_cartesian(u, lambda)) {
                    found = lambda;
                    break;
                }
            if (!found) {
                cert.witness = {e2, phi};
                return cert;
            }
            cert.lifts.push_back({e2, phi, *found});
        }
    cert.is_fibration = true;
    return cert;
}

namespace {

void require_rational_module(const CoeffSystem& f, ErrorKind kind)
{
    if (f.kind() != CoeffKind::Module && f.kind() != CoeffKind::Local && f.kind() != CoeffKind::Trivial)
        fail(kind, "module, local or trivial coefficients are required");
    if (f.ring() != Ring::Rationals)
        fail(ErrorKind::RingUnsupported, "maps on homology are computed over Q only");
}

// F(φ) for module-type data on the base
ExactMatrix module_value(const CoeffSystem& f, std::size_t phi)
{
    switch (f.kind()) {
    case CoeffKind::Module:
        return f.data().map(phi);
    case CoeffKind::Local:
        return f.data().map(f.localization().morphism(phi));
    default:
        return f.data().map(0);
    }
}

} // namespace

LocalityReport locality_check(const FinFunctor& u, const CoeffSystem& f, std::size_t b, std::size_t q)
{
    require_rational_module(f, ErrorKind::UnsupportedCoefficientKind);
    auto comma = comma_under(u, b);
    auto fiber = fiber_category(u, b);
    auto on_comma = std::make_shared<CoeffSystem>(restrict_system(f, comma.forget));
    auto on_fiber = std::make_shared<CoeffSystem>(restrict_system(f, fiber.inclusion));
    FinFunctor j = fiber_to_comma(u, fiber, comma);

    auto kc = thomason_complex(*on_comma, q + 1);
    auto kf = thomason_complex(*on_fiber, q + 1);
    auto hc = homology_basis(kc.complex, q);
    auto hf = homology_basis(kf.complex, q);
    const bool cov = f.variance() == Variance::Covariant;
    auto source = cov ? on_comma : on_fiber;
    auto target = cov ? on_fiber : on_comma;
    const CoeffSystem* local = on_fiber.get();
    auto m = CoeffMorphism::make(
        j, source, target, [local](const Simplex& s) { return ExactMatrix::identity(local->evaluate(s)); }, 1);
    ExactMatrix chain = induced_chain_map(m, q)[q].to_dense();
    ExactMatrix induced = cov ? induced_on_homology(hc, hf, chain) : induced_on_homology(hf, hc, chain);

    LocalityReport rep;
    rep.base_object = b;
    rep.degree = q;
    rep.comma_group = complex_homology(kc.complex, q).group;
    rep.fiber_group = complex_homology(kf.complex, q).group;
    rep.map_rank = rank(induced);
    rep.injective = rep.map_rank == induced.cols();
    rep.surjective = rep.map_rank == induced.rows();
    rep.isomorphism = rep.injective && rep.surjective;
    return rep;
}

CoeffSystem base_coefficients(const SplitFibration& fib, const CoeffSystem& f)
{
    if (!same_category(f.base(), fib.total))
        fail(ErrorKind::ShapeMismatch, "coefficients must live on the total category");
    if (f.kind() == CoeffKind::Trivial)
        return CoeffSystem::pullback(CoeffKind::Trivial, fib.base(), f.data());
    if (f.kind() != CoeffKind::Module)
        fail(ErrorKind::UnsupportedCoefficientShape, "fiberwise pages need constant or base-pulled module coefficients");
    const FinCat& B = *fib.base();
    const FinCat& E = *fib.total;
    const FinFunctor& u = fib.projection;
    const Diagram& d = f.data();
    std::vector<std::optional<std::size_t>> ranks(B.object_count());
    std::vector<std::optional<ExactMatrix>> maps(B.morphism_count());
    for (std::size_t e = 0; e < E.object_count(); ++e) {
        auto& r = ranks[u.object(e)];
        if (r && *r != d.rank(e))
            fail(ErrorKind::UnsupportedCoefficientShape, "values differ within the fiber over " +
                                                             B.object_name(u.object(e)));
        r = d.rank(e);
    }
    for (std::size_t m = 0; m < E.morphism_count(); ++m) {
        auto& slot = maps[u.morphism(m)];
        if (slot && !(*slot == d.map(m)))
            fail(ErrorKind::UnsupportedCoefficientShape, "maps over " + B.morphism_name(u.morphism(m)) + " differ");
        slot = d.map(m);
    }
    std::vector<std::size_t> rk;
    std::vector<ExactMatrix> mp;
    for (std::size_t b = 0; b < B.object_count(); ++b) {
        if (!ranks[b])
            fail(ErrorKind::UnsupportedCoefficientShape, "empty fiber over " + B.object_name(b) +
                                                             "; the base coefficient is not determined");
        rk.push_back(*ranks[b]);
    }
    for (std::size_t phi = 0; phi < B.morphism_count(); ++phi) {
        if (!maps[phi])
            fail(ErrorKind::UnsupportedCoefficientShape, "no morphism over " + B.morphism_name(phi));
        mp.push_back(*maps[phi]);
    }
    return CoeffSystem::pullback(CoeffKind::Module, fib.base(),
                                 coefficient_data(fib.base(), f.ring(), f.variance(), std::move(rk), std::move(mp)));
}

CoeffSystem fiberwise_coefficients(const SplitFibration& fib, const CoeffSystem& f_base, std::size_t q)
{
    require_rational_module(f_base, ErrorKind::UnsupportedCoefficientShape);
    if (!same_category(f_base.base(), fib.base()))
        fail(ErrorKind::ShapeMismatch, "base coefficients must live on the base category");
    const FinCat& B = *fib.base();
    const FinCat& E = *fib.total;
    const FinFunctor& u = fib.projection;
    const bool cov = f_base.variance() == Variance::Covariant;
    CoeffSystem total = restrict_system(f_base, u);

    std::vector<FiberCategory> fibers;
    std::vector<std::vector<std::size_t>> local_object; // E object -> index within its fiber
    std::vector<std::shared_ptr<const CoeffSystem>> systems;
    std::vector<HomologyBasis> bases;
    std::vector<std::size_t> ranks;
    for (std::size_t b = 0; b < B.object_count(); ++b) {
        fibers.push_back(fiber_category(u, b));
        std::vector<std::size_t> local(E.object_count(), 0);
        const auto& incl = fibers.back().inclusion;
        for (std::size_t x = 0; x < incl.object_map().size(); ++x)
            local[incl.object(x)] = x;
        local_object.push_back(std::move(local));
        systems.push_back(std::make_shared<CoeffSystem>(restrict_system(total, incl)));
        auto k = thomason_complex(*systems.back(), q + 1);
        bases.push_back(homology_basis(k.complex, q));
        ranks.push_back(bases.back().dimension());
    }

    std::vector<ExactMatrix> transports;
    for (std::size_t phi = 0; phi < B.morphism_count(); ++phi) {
        const std::size_t b = B.src(phi), b2 = B.dst(phi);
        const FiberCategory& from = fibers[b2];
        const FiberCategory& to = fibers[b];
        const FinFunctor& gphi = fib.g.transports[phi];
        // E_{b'} -> E_b, (b', x') |-> (b, G(φ)x')
        std::vector<std::size_t> obj, mor;
        for (std::size_t y = 0; y < from.category->object_count(); ++y) {
            auto [bb, x2] = fib.objects[from.inclusion.object(y)];
            obj.push_back(local_object[b][fib.object_index(b, gphi.object(x2))]);
        }
        const FinCat& to_cat = *to.category;
        for (std::size_t k = 0; k < from.category->morphism_count(); ++k) {
            std::size_t em = from.inclusion.morphism(k);
            auto [id_b2, m2] = fib.morphisms[em];
            std::size_t x_dst = fib.objects[E.dst(em)].second;
            std::size_t image = fib.morphism_lookup.at({B.identity(b), gphi.morphism(m2), gphi.object(x_dst)});
            std::optional<std::size_t> local;
            for (std::size_t j = 0; j < to_cat.morphism_count(); ++j)
                if (to.inclusion.morphism(j) == image)
                    local = j;
            ensure(local.has_value(), "transported morphism missing from the fiber");
            mor.push_back(*local);
        }
        FinFunctor restriction = FinFunctor::make(from.category, to.category, std::move(obj), std::move(mor));
        ExactMatrix value = module_value(f_base, phi);
        auto source = cov ? systems[b] : systems[b2];
        auto target = cov ? systems[b2] : systems[b];
        auto m = CoeffMorphism::make(restriction, source, target, [value](const Simplex&) { return value; }, 1);
        ExactMatrix chain = induced_chain_map(m, q)[q].to_dense();
        transports.push_back(cov ? induced_on_homology(bases[b], bases[b2], chain)
                                 : induced_on_homology(bases[b2], bases[b], chain));
    }
    return CoeffSystem::pullback(CoeffKind::Module, fib.base(),
                                 coefficient_data(fib.base(), Ring::Rationals, f_base.variance(), std::move(ranks),
                                                  std::move(transports)));
}

E2Page fibration_e2(const SplitFibration& fib, const CoeffSystem& f_base, std::size_t pmax, std::size_t qmax)
{
    require_rational_module(f_base, ErrorKind::UnsupportedCoefficientShape);
    CoeffSystem total = restrict_system(f_base, fib.projection);
    auto page = assemble_e2([&](std::size_t q) { return fiberwise_coefficients(fib, f_base, q); }, total, pmax, qmax);
    page.notes.push_back(f_base.variance() == Variance::Covariant
                             ? "fiberwise coefficients are covariant on the base, by restriction along the transports"
                             : "fiberwise coefficients are contravariant on the base, by restriction along the "
                               "transports");
    return page;
}

} // namespace catcoh
