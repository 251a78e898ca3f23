#include "helpers.hpp"

using namespace testing;

namespace {

std::vector<HomologyGroup> prefix(std::vector<HomologyGroup> v, std::size_t n)
{
    v.resize(n);
    return v;
}

ExactMatrix on_homology(const CoeffMorphism& m, std::size_t n)
{
    auto chain = induced_chain_map(m, n + 1);
    auto a = thomason_complex(m.source(), n + 1).complex;
    auto b = thomason_complex(m.target(), n + 1).complex;
    REQUIRE(is_chain_map(a, b, chain));
    return induced_on_homology(homology_basis(a, n), homology_basis(b, n), chain[n].to_dense());
}

} // namespace

TEST_CASE("complex of the point")
{
    auto t = CoeffSystem::trivial(share(terminal_category()), Ring::Integers, Variance::Covariant);
    auto a = thomason_cochain_complex(t, 5);
    for (std::size_t n = 0; n < a.complex.maps().size(); ++n)
        CHECK(a.complex.maps()[n].to_dense() == mat({{n % 2 == 0 ? 0L : 1L}}));
    auto h = thomason_homology_range(t, 4);
    CHECK(h[0] == Z());
    for (std::size_t n = 1; n <= 4; ++n)
        CHECK(h[n].is_zero());
}

TEST_CASE("cyclic groups against the bar complex")
{
    for (std::size_t order : {2u, 3u}) {
        auto B = share(cyclic_group_category(order));
        auto co = thomason_homology_range(CoeffSystem::trivial(B, Ring::Integers, Variance::Covariant), 5);
        CHECK(co == oracle::bar_group_cohomology(cyclic_table(order), 5));
        auto ho = thomason_homology_range(CoeffSystem::trivial(B, Ring::Integers, Variance::Contravariant), 4);
        CHECK(ho == oracle::bar_group_homology(cyclic_table(order), 4));
    }
    auto B = share(cyclic_group_category(2));
    auto t = CoeffSystem::trivial(B, Ring::Integers, Variance::Contravariant);
    CHECK(homology(t, 1) == torsion(2));
    CHECK(homology(t, 2).is_zero());
    CHECK(cohomology(CoeffSystem::trivial(B, Ring::Integers, Variance::Covariant), 2) == torsion(2));
}

TEST_CASE("posets against the order complex")
{
    for (const auto& nc : corpus::fixed_categories()) {
        if (!nc.cat->is_thin())
            continue;
        auto leq = oracle::order_relation(*nc.cat);
        CAPTURE(nc.name);
        CHECK(thomason_homology_range(CoeffSystem::trivial(nc.cat, Ring::Integers, Variance::Covariant), 3) ==
              prefix(oracle::order_complex_cohomology(leq, 3), 4));
        CHECK(thomason_homology_range(CoeffSystem::trivial(nc.cat, Ring::Integers, Variance::Contravariant), 3) ==
              prefix(oracle::order_complex_homology(leq, 3), 4));
    }
    auto P = corpus::circle_poset();
    CHECK(cohomology(CoeffSystem::trivial(P, Ring::Integers, Variance::Covariant), 1) == Z());
}

TEST_CASE("BW complex and the Thomason complex agree")
{
    corpus::Rng rng(73);
    for (auto c : {share(interval_category(1)), share(interval_category(2)), corpus::group_category(2),
                   corpus::idempotent_monoid()}) {
        auto fc = factorization_category(c);
        for (int trial = 0; trial < 3; ++trial) {
            auto d = corpus::random_bw_diagram(fc, Ring::Integers, rng);
            auto t = CoeffSystem::pullback(CoeffKind::BW, c, d);
            auto direct = complex_homology_all(bw_direct_complex(fc, d, 3).complex);
            auto via = thomason_homology_range(t, 2);
            for (std::size_t n = 0; n <= 2; ++n)
                CHECK(direct[n].group == via[n]);
        }
    }
    // sign representation of Z/2 read as a natural system
    auto B = corpus::group_category(2);
    auto fc = factorization_category(B);
    std::vector<ExactMatrix> maps;
    for (std::size_t m = 0; m < fc.category->morphism_count(); ++m) {
        const auto& p = fc.pairs[m];
        bool flip = B->is_identity(p.alpha) != B->is_identity(p.beta);
        maps.push_back(mat({{flip ? -1L : 1L}}));
    }
    auto d = Diagram::make(fc.category, Ring::Integers, Variance::Covariant,
                           std::vector<std::size_t>(fc.category->object_count(), 1), maps);
    auto direct = complex_homology_all(bw_direct_complex(fc, d, 3).complex);
    auto via = thomason_homology_range(CoeffSystem::pullback(CoeffKind::BW, B, d), 2);
    for (std::size_t n = 0; n <= 2; ++n)
        CHECK(direct[n].group == via[n]);
}

TEST_CASE("normalized complexes")
{
    auto P = corpus::circle_poset();
    auto t = CoeffSystem::trivial(P, Ring::Integers, Variance::Covariant);
    auto n = thomason_complex(t, 2, {.normalized = true});
    CHECK(n.normalized);
    CHECK(n.complex.dims() == std::vector<std::size_t>{4, 4, 0});

    auto point = CoeffSystem::trivial(share(terminal_category()), Ring::Integers, Variance::Covariant);
    CHECK(thomason_complex(point, 2, {.normalized = true}).complex.dims() == std::vector<std::size_t>{1, 0, 0});

    auto B = CoeffSystem::trivial(corpus::group_category(2), Ring::Integers, Variance::Covariant);
    CHECK(thomason_complex(B, 2, {.normalized = true}).complex.dims() == std::vector<std::size_t>{1, 1, 1});

    corpus::Rng rng(79);
    for (const auto& nc : corpus::fixed_categories())
        for (auto v : {Variance::Covariant, Variance::Contravariant}) {
            auto s = corpus::random_system(nc.cat, Ring::Integers, v, rng);
            CAPTURE(nc.name);
            CHECK(thomason_homology_range(s, 2, {.normalized = true}) == thomason_homology_range(s, 2));
        }
}

TEST_CASE("a point of the circle")
{
    auto P = corpus::circle_poset();
    auto point = share(terminal_category());
    auto pick = FinFunctor::constant(point, P, obj(*P, "a"));
    auto on_p = std::make_shared<const CoeffSystem>(CoeffSystem::trivial(P, Ring::Rationals, Variance::Covariant));
    auto on_pt = std::make_shared<const CoeffSystem>(restrict_system(*on_p, pick));
    auto m = CoeffMorphism::make(pick, on_p, on_pt, [](const Simplex&) { return ExactMatrix::identity(1); }, 2);
    CHECK(on_homology(m, 0) == ExactMatrix::identity(1));
    auto h1 = on_homology(m, 1);
    CHECK(h1.rows() == 0);
    CHECK(h1.cols() == 1);
}

TEST_CASE("terminal objects give contractible categories")
{
    auto point = share(terminal_category());
    for (const auto& nc : corpus::fixed_categories()) {
        const FinCat& c = *nc.cat;
        for (std::size_t o = 0; o < c.object_count(); ++o) {
            bool terminal = true;
            for (std::size_t x = 0; x < c.object_count(); ++x)
                terminal = terminal && c.hom(x, o).size() == 1;
            if (!terminal)
                continue;
            CAPTURE(nc.name);
            auto pick = FinFunctor::constant(point, nc.cat, o);
            auto t = std::make_shared<const CoeffSystem>(CoeffSystem::trivial(nc.cat, Ring::Rationals, Variance::Covariant));
            auto r = std::make_shared<const CoeffSystem>(restrict_system(*t, pick));
            auto m = CoeffMorphism::make(pick, t, r, [](const Simplex&) { return ExactMatrix::identity(1); }, 2);
            CHECK(on_homology(m, 0) == ExactMatrix::identity(1));
            CHECK(on_homology(m, 1).rows() == 0);
            CHECK(on_homology(m, 1).cols() == 0);
        }
    }
}

TEST_CASE("torus")
{
    auto P = corpus::circle_poset();
    auto T = share(product_category(*P, *P));
    auto h = thomason_homology_range(CoeffSystem::trivial(T, Ring::Integers, Variance::Covariant), 2);
    CHECK(h == std::vector<HomologyGroup>{Z(), Z(2), Z()});
}

TEST_CASE("induced chain maps commute with differentials")
{
    corpus::Rng rng(83);
    for (const auto& nc : corpus::fixed_categories()) {
        auto u = corpus::random_functor_into(nc.cat, rng);
        for (auto v : {Variance::Covariant, Variance::Contravariant}) {
            auto t = std::make_shared<const CoeffSystem>(corpus::random_system(nc.cat, Ring::Integers, v, rng));
            auto r = std::make_shared<const CoeffSystem>(restrict_system(*t, u));
            auto m = v == Variance::Covariant
                         ? CoeffMorphism::make(u, t, r, [&](const Simplex& s) { return ExactMatrix::identity(r->evaluate(s)); }, 2)
                         : CoeffMorphism::make(u, r, t, [&](const Simplex& s) { return ExactMatrix::identity(r->evaluate(s)); }, 2);
            auto f = induced_chain_map(m, 3);
            CHECK(is_chain_map(thomason_complex(m.source(), 3).complex, thomason_complex(m.target(), 3).complex, f));
        }
    }
}

TEST_CASE("the low degree diagram computes degree zero")
{
    corpus::Rng rng(89);
    for (const auto& nc : corpus::fixed_categories()) {
        auto co = corpus::random_system(nc.cat, Ring::Integers, Variance::Covariant, rng);
        CHECK(finite_limit(low_degree_diagram(co)).group == cohomology(co, 0));
        auto contra = corpus::random_system(nc.cat, Ring::Integers, Variance::Contravariant, rng);
        CHECK(finite_colimit(low_degree_diagram(contra)).group == homology(contra, 0));
    }
}

TEST_CASE("restriction along adjoints")
{
    // 0 -> Z on [1]; picking 0 is left adjoint to [1] -> 1, picking 1 is right adjoint
    auto I = share(interval_category(1));
    auto point = share(terminal_category());
    std::vector<ExactMatrix> maps(3);
    maps[mor(*I, "id_0")] = ExactMatrix(0, 0);
    maps[mor(*I, "id_1")] = ExactMatrix::identity(1);
    maps[mor(*I, "0<1")] = ExactMatrix(1, 0);
    for (auto v : {Variance::Covariant, Variance::Contravariant}) {
        auto t = std::make_shared<const CoeffSystem>(CoeffSystem::pullback(
            CoeffKind::Module, I, Diagram::make(I, Ring::Rationals, v, {0, 1}, v == Variance::Covariant ? maps : [&] {
                auto m = maps;
                m[mor(*I, "0<1")] = ExactMatrix(0, 1);
                return m;
            }())));
        for (std::size_t o : {obj(*I, "0"), obj(*I, "1")}) {
            auto pick = FinFunctor::constant(point, I, o);
            auto r = std::make_shared<const CoeffSystem>(restrict_system(*t, pick));
            auto id = [&](const Simplex& s) { return ExactMatrix::identity(r->evaluate(s)); };
            auto m = v == Variance::Covariant ? CoeffMorphism::make(pick, t, r, id, 2)
                                              : CoeffMorphism::make(pick, r, t, id, 2);
            auto h0 = on_homology(m, 0);
            bool iso = h0.rows() == h0.cols() && rank(h0) == h0.rows();
            bool left_adjoint = o == obj(*I, "0");
            CAPTURE(to_string(v));
            // the left adjoint gives the isomorphism in both variances
            CHECK(iso == left_adjoint);
        }
    }

    // the initial object of a poset is left adjoint to the unique functor to the point
    corpus::Rng rng(113);
    for (const auto& nc : corpus::fixed_categories()) {
        const FinCat& c = *nc.cat;
        for (std::size_t o = 0; o < c.object_count(); ++o) {
            bool initial = true;
            for (std::size_t x = 0; x < c.object_count(); ++x)
                initial = initial && c.hom(o, x).size() == 1;
            if (!initial)
                continue;
            CAPTURE(nc.name);
            auto d = corpus::random_diagram(nc.cat, Ring::Integers, Variance::Covariant, rng);
            auto h = thomason_homology_range(CoeffSystem::pullback(CoeffKind::Module, nc.cat, d), 2);
            CHECK(h[0] == Z(d.rank(o)));
            CHECK(h[1].is_zero());
            CHECK(h[2].is_zero());
        }
    }
}
