#include "catcoh/coeff.hpp"

#include <algorithm>

namespace catcoh {

std::string_view to_string(CoeffKind kind)
{
    switch (kind) {
    case CoeffKind::BW:
        return "bw";
    case CoeffKind::Bimodule:
        return "bimodule";
    case CoeffKind::Module:
        return "module";
    case CoeffKind::Local:
        return "local";
    case CoeffKind::Trivial:
        return "trivial";
    case CoeffKind::Truncated:
        return "truncated";
    }
    return "?";
}

CoeffKind parse_coeff_kind(std::string_view text)
{
    for (auto k : {CoeffKind::BW, CoeffKind::Bimodule, CoeffKind::Module, CoeffKind::Local, CoeffKind::Trivial,
                   CoeffKind::Truncated})
        if (text == to_string(k))
            return k;
    if (text == "constant")
        return CoeffKind::Trivial;
    fail(ErrorKind::InvalidInput, "unknown coefficient kind '" + std::string(text) + "'");
}

Diagram coefficient_data(CatPtr index, Ring ring, Variance variance, std::vector<std::size_t> ranks,
                         std::vector<ExactMatrix> maps)
{
    try {
        return Diagram::make(std::move(index), ring, variance, std::move(ranks), std::move(maps));
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::NonFunctorialDiagram)
            fail(ErrorKind::NonFunctorialData, e.detail());
        throw;
    }
}

CatPtr bimodule_index(const FinCat& c)
{
    return share(product_category(opposite_category(c), c));
}

namespace {

bool same_category(const CatPtr& a, const CatPtr& b)
{
    return a == b || *a == *b;
}

} // namespace

CoeffSystem CoeffSystem::pullback(CoeffKind kind, CatPtr base, Diagram data, std::optional<FinFunctor> localization)
{
    CoeffSystem t;
    t.base_ = base;
    t.ring_ = data.ring();
    t.variance_ = data.variance();
    t.kind_ = kind;
    const FinCat& C = *base;
    const CatPtr& index = data.index();
    switch (kind) {
    case CoeffKind::BW: {
        auto fc = std::make_shared<FactorizationCategory>(factorization_category(base));
        if (!same_category(index, fc->category))
            fail(ErrorKind::ShapeMismatch, "BW data must live on the factorization category of the base");
        t.fc_ = std::move(fc);
        break;
    }
    case CoeffKind::Bimodule:
        if (!same_category(index, bimodule_index(C)))
            fail(ErrorKind::ShapeMismatch, "bimodule data must live on C^op x C");
        break;
    case CoeffKind::Module:
        if (!same_category(index, base))
            fail(ErrorKind::ShapeMismatch, "module data must live on the base category");
        break;
    case CoeffKind::Local: {
        if (!localization)
            fail(ErrorKind::InvalidInput, "a local system needs a functor to a groupoid");
        const FinFunctor& q = *localization;
        if (!same_category(q.source(), base) || !same_category(q.target(), index))
            fail(ErrorKind::ShapeMismatch, "the localization must run from the base to the data's groupoid");
        for (std::size_t m = 0; m < C.morphism_count(); ++m)
            if (!q.target()->inverse(q.morphism(m)))
                fail(ErrorKind::NotALocalization, "morphism " + C.morphism_name(m) + " is sent to the non-invertible " +
                                                      q.target()->morphism_name(q.morphism(m)));
        t.q_ = std::make_shared<FinFunctor>(q);
        break;
    }
    case CoeffKind::Trivial:
        if (index->object_count() != 1 || index->morphism_count() != 1)
            fail(ErrorKind::ShapeMismatch, "trivial data must live on the terminal category");
        break;
    case CoeffKind::Truncated:
        fail(ErrorKind::InvalidInput, "truncated systems are built from tables");
    }
    t.data_ = std::make_shared<Diagram>(std::move(data));
    return t;
}

CoeffSystem CoeffSystem::trivial(CatPtr base, Ring ring, Variance variance, std::size_t rank)
{
    auto point = share(terminal_category());
    return pullback(CoeffKind::Trivial, std::move(base),
                    coefficient_data(point, ring, variance, {rank}, {ExactMatrix::identity(rank)}));
}

CoeffSystem CoeffSystem::truncated(CatPtr base, Ring ring, Variance variance, TruncatedTables tables)
{
    const FinCat& C = *base;
    const std::size_t N = tables.max_dim;
    if (tables.ranks.size() != N + 1 || tables.cofaces.size() != N + 1)
        fail(ErrorKind::IncompleteTables, "tables must cover every dimension 0.." + std::to_string(N));
    for (std::size_t n = 0; n <= N; ++n) {
        const auto& level = nerve_level(C, n);
        if (tables.ranks[n].size() != level.size())
            fail(ErrorKind::IncompleteTables, "dimension " + std::to_string(n) + " lists " +
                                                  std::to_string(tables.ranks[n].size()) + " ranks for " +
                                                  std::to_string(level.size()) + " simplices");
        if (n == 0)
            continue;
        if (tables.cofaces[n].size() != level.size())
            fail(ErrorKind::IncompleteTables, "dimension " + std::to_string(n) + " is missing coface maps");
        for (std::size_t k = 0; k < level.size(); ++k) {
            const Simplex& g = level[k];
            if (tables.cofaces[n][k].size() != n + 1)
                fail(ErrorKind::IncompleteTables, "simplex " + simplex_key(C, g) + " needs " + std::to_string(n + 1) +
                                                      " coface maps");
            for (std::size_t i = 0; i <= n; ++i) {
                Simplex face = apply_simplex_map(C, OrderMap::coface(n, i), g);
                std::size_t r_face = tables.ranks[n - 1][simplex_index(C, face)];
                std::size_t r_g = tables.ranks[n][k];
                const ExactMatrix& m = tables.cofaces[n][k][i];
                bool ok = variance == Variance::Covariant ? (m.rows() == r_g && m.cols() == r_face)
                                                          : (m.rows() == r_face && m.cols() == r_g);
                if (!ok)
                    fail(ErrorKind::ShapeMismatch, "coface_" + std::to_string(i) + " of " + simplex_key(C, g) +
                                                       " has the wrong shape");
                if (ring == Ring::Integers && !is_integral(m))
                    fail(ErrorKind::NotIntegral, "coface_" + std::to_string(i) + " of " + simplex_key(C, g));
            }
        }
    }
    auto coface = [&](const Simplex& g, std::size_t i) -> const ExactMatrix& {
        return tables.cofaces[g.dim()][simplex_index(C, g)][i];
    };
    for (std::size_t n = 2; n <= N; ++n)
        for (const Simplex& g : nerve_level(C, n))
            for (std::size_t j = 1; j <= n; ++j)
                for (std::size_t i = 0; i < j; ++i) {
                    // δ^j∘δ^i = δ^i∘δ^{j-1}
                    Simplex gj = apply_simplex_map(C, OrderMap::coface(n, j), g);
                    Simplex gi = apply_simplex_map(C, OrderMap::coface(n, i), g);
                    ExactMatrix lhs, rhs;
                    if (variance == Variance::Covariant) {
                        lhs = coface(g, j) * coface(gj, i);
                        rhs = coface(g, i) * coface(gi, j - 1);
                    } else {
                        lhs = coface(gj, i) * coface(g, j);
                        rhs = coface(gi, j - 1) * coface(g, i);
                    }
                    if (!(lhs == rhs))
                        fail(ErrorKind::CofaceRelationViolation, "simplex " + simplex_key(C, g) + ", pair (" +
                                                                     std::to_string(i) + "," + std::to_string(j) + ")");
                }
    CoeffSystem t;
    t.base_ = std::move(base);
    t.ring_ = ring;
    t.variance_ = variance;
    t.kind_ = CoeffKind::Truncated;
    t.tables_ = std::make_shared<TruncatedTables>(std::move(tables));
    return t;
}

std::optional<std::size_t> CoeffSystem::max_dim() const
{
    if (tables_)
        return tables_->max_dim;
    return std::nullopt;
}

const Diagram& CoeffSystem::data() const
{
    if (!data_)
        fail(ErrorKind::UnsupportedCoefficientKind, "a truncated system has no ladder data");
    return *data_;
}

const FactorizationCategory& CoeffSystem::factorization() const
{
    if (!fc_)
        fail(ErrorKind::UnsupportedCoefficientKind, "only BW systems carry a factorization category");
    return *fc_;
}

const FinFunctor& CoeffSystem::localization() const
{
    if (!q_)
        fail(ErrorKind::UnsupportedCoefficientKind, "only local systems carry a localization");
    return *q_;
}

const TruncatedTables& CoeffSystem::tables() const
{
    if (!tables_)
        fail(ErrorKind::UnsupportedCoefficientKind, "only truncated systems carry tables");
    return *tables_;
}

std::size_t CoeffSystem::index_object(const Simplex& s) const
{
    const FinCat& C = *base_;
    switch (kind_) {
    case CoeffKind::BW:
        return nu_object(C, s);
    case CoeffKind::Bimodule:
        return product_index(s.object(C, s.dim()), s.vertex, C.object_count());
    case CoeffKind::Module:
        return s.vertex;
    case CoeffKind::Local:
        return q_->object(s.vertex);
    case CoeffKind::Trivial:
        return 0;
    case CoeffKind::Truncated:
        break;
    }
    fail(ErrorKind::UnsupportedCoefficientKind, "a truncated system has no ladder data");
}

std::size_t CoeffSystem::index_morphism(const SimplexMorphism& sigma) const
{
    const FinCat& C = *base_;
    if (kind_ == CoeffKind::Trivial)
        return 0;
    if (kind_ == CoeffKind::BW)
        return nu_morphism_index(*fc_, sigma);
    auto p = nu_morphism(C, sigma);
    switch (kind_) {
    case CoeffKind::Bimodule:
        return product_index(p.alpha, p.beta, C.morphism_count());
    case CoeffKind::Module:
        return p.beta;
    case CoeffKind::Local:
        return q_->morphism(p.beta);
    default:
        break;
    }
    fail(ErrorKind::UnsupportedCoefficientKind, "a truncated system has no ladder data");
}

std::size_t CoeffSystem::evaluate(const Simplex& s) const
{
    if (tables_) {
        if (s.dim() > tables_->max_dim)
            fail(ErrorKind::BeyondTruncation, "dimension " + std::to_string(s.dim()) + " exceeds the tables' " +
                                                  std::to_string(tables_->max_dim));
        return tables_->ranks[s.dim()][simplex_index(*base_, s)];
    }
    return data_->rank(index_object(s));
}

ExactMatrix CoeffSystem::induced_map(const SimplexMorphism& sigma) const
{
    if (!tables_)
        return data_->map(index_morphism(sigma));
    const FinCat& C = *base_;
    if (sigma.target.dim() > tables_->max_dim)
        fail(ErrorKind::BeyondTruncation, "dimension " + std::to_string(sigma.target.dim()) +
                                              " exceeds the tables' " + std::to_string(tables_->max_dim));
    if (!sigma.map.is_injective())
        fail(ErrorKind::UnsupportedCoefficientShape, "truncated systems carry coface data only");
    if (sigma.map.is_identity()) {
        std::size_t r = evaluate(sigma.target);
        return ExactMatrix::identity(r);
    }
    // σ = δ^j∘σ' with j the largest value σ misses
    const auto& v = sigma.map.values;
    std::size_t n = sigma.map.target_dim;
    std::size_t j = n;
    while (std::find(v.begin(), v.end(), j) != v.end())
        --j;
    std::vector<std::size_t> rest;
    for (std::size_t x : v)
        rest.push_back(x < j ? x : x - 1);
    const Simplex& g = sigma.target;
    Simplex gj = apply_simplex_map(C, OrderMap::coface(n, j), g);
    SimplexMorphism inner{sigma.source, gj, OrderMap{rest, n - 1}};
    const ExactMatrix& outer = tables_->cofaces[n][simplex_index(C, g)][j];
    if (variance_ == Variance::Covariant)
        return outer * induced_map(inner);
    return induced_map(inner) * outer;
}

ExactMatrix CoeffSystem::coface_map(const Simplex& g, std::size_t i) const
{
    if (tables_) {
        if (g.dim() > tables_->max_dim)
            fail(ErrorKind::BeyondTruncation, "dimension " + std::to_string(g.dim()) + " exceeds the tables' " +
                                                  std::to_string(tables_->max_dim));
        return tables_->cofaces[g.dim()][simplex_index(*base_, g)][i];
    }
    return induced_map(SimplexMorphism::along(*base_, OrderMap::coface(g.dim(), i), g));
}

CoeffSystem CoeffSystem::with_ring(Ring ring) const
{
    CoeffSystem t = *this;
    t.ring_ = ring;
    if (data_) {
        std::vector<ExactMatrix> maps;
        for (std::size_t m = 0; m < data_->index()->morphism_count(); ++m)
            maps.push_back(data_->map(m));
        t.data_ = std::make_shared<Diagram>(
            Diagram::make(data_->index(), ring, data_->variance(), data_->ranks(), std::move(maps)));
    } else if (ring == Ring::Integers) {
        for (const auto& level : tables_->cofaces)
            for (const auto& per : level)
                for (const auto& m : per)
                    if (!is_integral(m))
                        fail(ErrorKind::NotIntegral, "truncated coface map");
    }
    return t;
}

namespace {

Diagram pull_data(const Diagram& d, CatPtr index, const std::function<std::size_t(std::size_t)>& obj,
                  const std::function<std::size_t(std::size_t)>& mor)
{
    std::vector<std::size_t> ranks;
    for (std::size_t x = 0; x < index->object_count(); ++x)
        ranks.push_back(d.rank(obj(x)));
    std::vector<ExactMatrix> maps;
    for (std::size_t m = 0; m < index->morphism_count(); ++m)
        maps.push_back(d.map(mor(m)));
    return coefficient_data(std::move(index), d.ring(), d.variance(), std::move(ranks), std::move(maps));
}

} // namespace

CoeffSystem restrict_system(const CoeffSystem& t, const FinFunctor& i)
{
    if (!same_category(i.target(), t.base()))
        fail(ErrorKind::ShapeMismatch, "restriction functor does not land in the system's base");
    const CatPtr& D = i.source();
    switch (t.kind()) {
    case CoeffKind::BW: {
        auto fd = factorization_category(D);
        auto fi = factorization_functor(i, fd, t.factorization());
        return CoeffSystem::pullback(
            CoeffKind::BW, D,
            pull_data(t.data(), fd.category, [&](std::size_t x) { return fi.object(x); },
                      [&](std::size_t m) { return fi.morphism(m); }));
    }
    case CoeffKind::Bimodule: {
        const std::size_t oe = i.target()->object_count(), me = i.target()->morphism_count();
        const std::size_t od = D->object_count(), md = D->morphism_count();
        return CoeffSystem::pullback(
            CoeffKind::Bimodule, D,
            pull_data(t.data(), bimodule_index(*D),
                      [&](std::size_t x) { return product_index(i.object(x / od), i.object(x % od), oe); },
                      [&](std::size_t m) { return product_index(i.morphism(m / md), i.morphism(m % md), me); }));
    }
    case CoeffKind::Module:
        return CoeffSystem::pullback(CoeffKind::Module, D,
                                     pull_data(t.data(), D, [&](std::size_t x) { return i.object(x); },
                                               [&](std::size_t m) { return i.morphism(m); }));
    case CoeffKind::Local:
        return CoeffSystem::pullback(CoeffKind::Local, D, t.data(), FinFunctor::compose(t.localization(), i));
    case CoeffKind::Trivial:
        return CoeffSystem::pullback(CoeffKind::Trivial, D, t.data());
    case CoeffKind::Truncated:
        break;
    }
    const FinCat& d = *D;
    TruncatedTables tab;
    tab.max_dim = *t.max_dim();
    tab.ranks.resize(tab.max_dim + 1);
    tab.cofaces.resize(tab.max_dim + 1);
    for (std::size_t n = 0; n <= tab.max_dim; ++n)
        for (const Simplex& s : nerve_level(d, n)) {
            Simplex image = delta_u(i, s);
            tab.ranks[n].push_back(t.evaluate(image));
            if (n == 0)
                continue;
            std::vector<ExactMatrix> per;
            for (std::size_t k = 0; k <= n; ++k)
                per.push_back(t.coface_map(image, k));
            tab.cofaces[n].push_back(std::move(per));
        }
    return CoeffSystem::truncated(D, t.ring(), t.variance(), std::move(tab));
}

CoeffSystem sample_truncated(const CoeffSystem& t, std::size_t max_dim)
{
    const FinCat& C = *t.base();
    TruncatedTables tab;
    tab.max_dim = max_dim;
    tab.ranks.resize(max_dim + 1);
    tab.cofaces.resize(max_dim + 1);
    for (std::size_t n = 0; n <= max_dim; ++n)
        for (const Simplex& s : nerve_level(C, n)) {
            tab.ranks[n].push_back(t.evaluate(s));
            if (n == 0)
                continue;
            std::vector<ExactMatrix> per;
            for (std::size_t k = 0; k <= n; ++k)
                per.push_back(t.coface_map(s, k));
            tab.cofaces[n].push_back(std::move(per));
        }
    return CoeffSystem::truncated(t.base(), t.ring(), t.variance(), std::move(tab));
}

namespace {

void check_shape(const ExactMatrix& m, std::size_t rows, std::size_t cols, const std::string& where)
{
    if (m.rows() != rows || m.cols() != cols)
        fail(ErrorKind::NaturalityViolation, "component at " + where + " is " + std::to_string(m.rows()) + "x" +
                                                 std::to_string(m.cols()) + ", expected " + std::to_string(rows) +
                                                 "x" + std::to_string(cols));
}

} // namespace

CoeffMorphism CoeffMorphism::make(FinFunctor phi, std::shared_ptr<const CoeffSystem> source,
                                  std::shared_ptr<const CoeffSystem> target, Component tau, std::size_t check_dim)
{
    const CoeffSystem& t1 = *source;
    const CoeffSystem& t2 = *target;
    if (t1.variance() != t2.variance())
        fail(ErrorKind::VarianceMismatch, "source and target systems have different variance");
    if (t1.ring() != t2.ring())
        fail(ErrorKind::RingMismatch, "source and target systems live over different rings");
    const bool cov = t1.variance() == Variance::Covariant;
    // simplices are taken in `walk`, φ carries them into the other base
    const CoeffSystem& walk_sys = cov ? t2 : t1;
    const CoeffSystem& image_sys = cov ? t1 : t2;
    if (!same_category(phi.source(), walk_sys.base()) || !same_category(phi.target(), image_sys.base()))
        fail(ErrorKind::ShapeMismatch, "φ does not run between the bases in the required direction");
    const FinCat& W = *walk_sys.base();
    std::size_t top = check_dim;
    if (auto m = t1.max_dim())
        top = std::min(top, *m);
    if (auto m = t2.max_dim())
        top = std::min(top, *m);

    auto comp = [&](const Simplex& s) {
        ExactMatrix c = tau(s);
        std::size_t r_walk = walk_sys.evaluate(s);
        std::size_t r_image = image_sys.evaluate(delta_u(phi, s));
        // covariant: T1(φg) -> T2(g); contravariant: T1(f) -> T2(φf)
        if (cov)
            check_shape(c, r_walk, r_image, simplex_key(W, s));
        else
            check_shape(c, r_image, r_walk, simplex_key(W, s));
        return c;
    };
    auto check = [&](const SimplexMorphism& sigma) {
        SimplexMorphism image{delta_u(phi, sigma.source), delta_u(phi, sigma.target), sigma.map};
        ExactMatrix lhs, rhs;
        if (cov) {
            lhs = t2.induced_map(sigma) * comp(sigma.source);
            rhs = comp(sigma.target) * t1.induced_map(image);
        } else {
            lhs = comp(sigma.source) * t1.induced_map(sigma);
            rhs = t2.induced_map(image) * comp(sigma.target);
        }
        if (!(lhs == rhs))
            fail(ErrorKind::NaturalityViolation, "square along " + simplex_key(W, sigma.source) + " -> " +
                                                     simplex_key(W, sigma.target) + " does not commute");
    };
    for (std::size_t n = 0; n <= top; ++n)
        for (const Simplex& g : nerve_level(W, n)) {
            comp(g);
            for (std::size_t i = 0; n > 0 && i <= n; ++i)
                check(SimplexMorphism::along(W, OrderMap::coface(n, i), g));
            if (t1.is_pulled_back() && t2.is_pulled_back() && n + 1 <= top)
                for (std::size_t j = 0; j <= n; ++j)
                    check(SimplexMorphism::along(W, OrderMap::codegeneracy(n, j), g));
        }
    CoeffMorphism m;
    m.phi_ = std::move(phi);
    m.source_ = std::move(source);
    m.target_ = std::move(target);
    m.tau_ = std::move(tau);
    return m;
}

CoeffMorphism CoeffMorphism::identity(std::shared_ptr<const CoeffSystem> t)
{
    CoeffMorphism m;
    m.phi_ = FinFunctor::identity(t->base());
    const CoeffSystem* sys = t.get();
    m.tau_ = [sys](const Simplex& s) { return ExactMatrix::identity(sys->evaluate(s)); };
    m.source_ = t;
    m.target_ = std::move(t);
    return m;
}

} // namespace catcoh
