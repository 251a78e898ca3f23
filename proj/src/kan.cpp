#include "catcoh/kan.hpp"

namespace catcoh {

namespace {

void require_module_type(const CoeffSystem& f)
{
    switch (f.kind()) {
    case CoeffKind::Module:
    case CoeffKind::Local:
    case CoeffKind::Trivial:
        return;
    default:
        fail(ErrorKind::UnsupportedCoefficientKind,
             std::string(to_string(f.kind())) +
                 " coefficients would need comma categories over Δ/B, which are infinite; use module, local or "
                 "trivial coefficients");
    }
}

DerivedImage derived_image(const FinFunctor& u, const CoeffSystem& f, std::size_t q, Variance variance)
{
    require_module_type(f);
    if (f.variance() != variance)
        fail(ErrorKind::VarianceMismatch, variance == Variance::Covariant
                                              ? "right Kan extensions take covariant coefficients"
                                              : "left Kan extensions take contravariant coefficients");
    if (!(u.source() == f.base() || *u.source() == *f.base()))
        fail(ErrorKind::ShapeMismatch, "coefficients do not live on the source of u");
    const FinCat& B = *u.target();
    DerivedImage img;
    img.u = u;
    img.degree = q;
    img.variance = variance;
    img.ring = f.ring();

    std::vector<CommaCategory> commas;
    std::vector<std::shared_ptr<const CoeffSystem>> systems;
    std::vector<AssembledComplex> complexes;
    for (std::size_t b = 0; b < B.object_count(); ++b) {
        commas.push_back(comma_under(u, b));
        systems.push_back(std::make_shared<CoeffSystem>(restrict_system(f, commas.back().forget)));
        complexes.push_back(thomason_complex(*systems.back(), q + 1));
        img.values.push_back(complex_homology(complexes.back().complex, q).group);
    }
    if (f.ring() != Ring::Rationals)
        return img;

    std::vector<HomologyBasis> bases;
    for (const auto& k : complexes)
        bases.push_back(homology_basis(k.complex, q));
    for (std::size_t beta = 0; beta < B.morphism_count(); ++beta) {
        std::size_t b = B.src(beta), b2 = B.dst(beta);
        // b'/u -> b/u; the coefficients agree on the nose, so τ is the identity
        FinFunctor pre = comma_precomposition(u, beta, commas[b], commas[b2]);
        const bool cov = variance == Variance::Covariant;
        auto source = cov ? systems[b] : systems[b2];
        auto target = cov ? systems[b2] : systems[b];
        // components are indexed by simplices of b'/u in both variances
        const CoeffSystem* local = systems[b2].get();
        auto m = CoeffMorphism::make(
            pre, source, target, [local](const Simplex& s) { return ExactMatrix::identity(local->evaluate(s)); }, 0);
        auto chain = induced_chain_map(m, q);
        ExactMatrix f_q = chain[q].to_dense();
        img.transports.push_back(cov ? induced_on_homology(bases[b], bases[b2], f_q)
                                     : induced_on_homology(bases[b2], bases[b], f_q));
    }
    return img;
}

long signed_dim(std::size_t d, std::size_t degree)
{
    return degree % 2 == 0 ? static_cast<long>(d) : -static_cast<long>(d);
}

} // namespace

CoeffSystem DerivedImage::as_module() const
{
    if (ring != Ring::Rationals || transports.size() != u.target()->morphism_count())
        fail(ErrorKind::RingUnsupported, "transports on homology are only defined over Q");
    std::vector<std::size_t> ranks;
    for (const auto& h : values)
        ranks.push_back(h.free_rank);
    Diagram d = coefficient_data(u.target(), ring, variance, std::move(ranks), transports);
    return CoeffSystem::pullback(CoeffKind::Module, u.target(), std::move(d));
}

DerivedImage derived_right_kan(const FinFunctor& u, const CoeffSystem& f, std::size_t q)
{
    return derived_image(u, f, q, Variance::Covariant);
}

DerivedImage derived_left_kan(const FinFunctor& u, const CoeffSystem& f, std::size_t q)
{
    return derived_image(u, f, q, Variance::Contravariant);
}

E2Checks check_e2(const E2Page& page)
{
    E2Checks c;
    const std::size_t P = page.pmax, Q = page.qmax;
    c.vanishing_beyond_bounds = page.abutment.at(P + Q + 1).is_zero();
    for (std::size_t p = 0; p <= P + 1; ++p)
        c.vanishing_beyond_bounds = c.vanishing_beyond_bounds && page.grid[p][Q + 1].is_zero();
    for (std::size_t q = 0; q <= Q + 1; ++q)
        c.vanishing_beyond_bounds = c.vanishing_beyond_bounds && page.grid[P + 1][q].is_zero();
    for (std::size_t p = 0; p <= P; ++p)
        for (std::size_t q = 0; q <= Q; ++q)
            c.euler_e2 += signed_dim(page.dim(p, q), p + q);
    for (std::size_t n = 0; n <= P + Q; ++n)
        c.euler_abutment += signed_dim(page.abutment[n].free_rank, n);
    c.euler_holds = c.vanishing_beyond_bounds && c.euler_e2 == c.euler_abutment;

    // all (p, q) with p + q = n lie in the grid when n <= min(P, Q) + 1, or
    // everywhere once the page is known to vanish beyond the bounds
    std::size_t top = c.vanishing_beyond_bounds ? P + Q + 1 : std::min(P, Q) + 1;
    c.degenerates = true;
    for (std::size_t n = 0; n <= top; ++n) {
        std::size_t sum = 0;
        for (std::size_t p = 0; p <= std::min(n, P + 1); ++p)
            if (n - p <= Q + 1)
                sum += page.dim(p, n - p);
        std::size_t h = page.abutment[n].free_rank;
        c.bound_degrees.push_back(n);
        c.bound_holds = c.bound_holds && h <= sum;
        c.degenerates = c.degenerates && h == sum;
    }

    bool row_only = true, column_only = true;
    for (std::size_t p = 0; p <= P + 1; ++p)
        for (std::size_t q = 0; q <= Q + 1; ++q) {
            if (q > 0 && page.dim(p, q) != 0)
                row_only = false;
            if (p > 0 && page.dim(p, q) != 0)
                column_only = false;
        }
    if (row_only) {
        bool ok = true;
        for (std::size_t n = 0; n <= P + 1; ++n)
            ok = ok && page.abutment[n].free_rank == page.dim(n, 0);
        c.row_collapse_holds = ok;
    }
    if (column_only) {
        bool ok = true;
        for (std::size_t n = 0; n <= Q + 1; ++n)
            ok = ok && page.abutment[n].free_rank == page.dim(0, n);
        c.column_collapse_holds = ok;
    }
    return c;
}

E2Page assemble_e2(const std::function<CoeffSystem(std::size_t)>& coefficient_on_base, const CoeffSystem& total,
                   std::size_t pmax, std::size_t qmax)
{
    if (total.ring() != Ring::Rationals)
        fail(ErrorKind::RingUnsupported, "E2 pages need homology transports, which are defined over Q only");
    E2Page page;
    page.ring = total.ring();
    page.homological = total.variance() == Variance::Contravariant;
    page.pmax = pmax;
    page.qmax = qmax;
    page.grid.assign(pmax + 2, std::vector<HomologyGroup>(qmax + 2));
    for (std::size_t q = 0; q <= qmax + 1; ++q) {
        auto column = thomason_homology_range(coefficient_on_base(q), pmax + 1);
        for (std::size_t p = 0; p <= pmax + 1; ++p)
            page.grid[p][q] = column[p];
    }
    page.abutment = thomason_homology_range(total, pmax + qmax + 1);
    if (page.homological)
        page.notes.push_back("homological grid indexed by p, q >= 0; third quadrant in cohomological "
                             "indexing");
    page.checks = check_e2(page);
    return page;
}

E2Page leray_e2(const FinFunctor& u, const CoeffSystem& f, std::size_t pmax, std::size_t qmax)
{
    require_module_type(f);
    if (f.ring() != Ring::Rationals)
        fail(ErrorKind::RingUnsupported, "E2 pages need homology transports, which are defined over Q only");
    if (f.variance() != Variance::Covariant)
        fail(ErrorKind::VarianceMismatch, "the cohomology spectral sequence takes covariant coefficients");
    return assemble_e2([&](std::size_t q) { return derived_right_kan(u, f, q).as_module(); }, f, pmax, qmax);
}

E2Page colim_e2(const FinFunctor& u, const CoeffSystem& f, std::size_t pmax, std::size_t qmax)
{
    require_module_type(f);
    if (f.ring() != Ring::Rationals)
        fail(ErrorKind::RingUnsupported, "E2 pages need homology transports, which are defined over Q only");
    if (f.variance() != Variance::Contravariant)
        fail(ErrorKind::VarianceMismatch, "the homology spectral sequence takes contravariant coefficients");
    auto page = assemble_e2([&](std::size_t q) { return derived_left_kan(u, f, q).as_module(); }, f, pmax, qmax);
    page.notes.push_back("derived images are taken over the comma categories b/u with contravariant coefficients");
    return page;
}

} // namespace catcoh
