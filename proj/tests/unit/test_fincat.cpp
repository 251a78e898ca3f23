#include "helpers.hpp"

using namespace testing;

namespace {

RawCategory one_object(std::vector<std::string> names, std::vector<std::array<std::size_t, 3>> compose)
{
    RawCategory r;
    r.objects = {"x"};
    for (auto& n : names)
        r.morphisms.push_back({n, 0, 0});
    r.compose = std::move(compose);
    return r;
}

void check_associative(const FinCat& c)
{
    for (std::size_t f = 0; f < c.morphism_count(); ++f)
        for (std::size_t g : c.morphisms_from(c.dst(f)))
            for (std::size_t h : c.morphisms_from(c.dst(g)))
                REQUIRE(c.compose(h, c.compose(g, f)) == c.compose(c.compose(h, g), f));
}

} // namespace

TEST_CASE("one object with only its identity is the terminal category")
{
    auto c = FinCat::validate(one_object({"1"}, {{0, 0, 0}}));
    CHECK(c.object_count() == 1);
    CHECK(c.morphism_count() == 1);
    CHECK(c.is_identity(0));
    CHECK(c.is_thin());
}

TEST_CASE("the table of Z/2 is forced by the group axioms")
{
    auto c = FinCat::validate(one_object({"1", "t"}, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
    CHECK(c.is_groupoid());
    CHECK(c.identity(0) == 0);
    CHECK(c.compose(1, 1) == 0);
    CHECK(c.inverse(1) == std::optional<std::size_t>(1));
}

TEST_CASE("a broken identity row is reported")
{
    // t·t = t and 1·t = 1, so neither element is a unit
    auto kind = error_of([] { FinCat::validate(one_object({"1", "t"}, {{0, 0, 0}, {0, 1, 0}, {1, 0, 1}, {1, 1, 1}})); });
    CHECK(kind == ErrorKind::MissingIdentity);
}

TEST_CASE("non-associative tables name the triple")
{
    try {
        FinCat::validate(one_object({"1", "a", "b"}, {{0, 0, 0}, {0, 1, 1}, {0, 2, 2}, {1, 0, 1}, {2, 0, 2},
                                                      {1, 1, 2}, {1, 2, 0}, {2, 1, 1}, {2, 2, 2}}));
        FAIL("expected NonAssociative");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonAssociative);
        CHECK(e.detail().find("triple") != std::string::npos);
    }
}

TEST_CASE("composition tables must respect endpoints and indices")
{
    RawCategory r;
    r.objects = {"a", "b"};
    r.morphisms = {{"id_a", 0, 0}, {"id_b", 1, 1}, {"f", 0, 1}};
    r.identities = {0, 1};
    fill_identity_compositions(r);
    auto ok = r;
    CHECK(FinCat::validate(ok).morphism_count() == 3);
    auto wrong = r;
    wrong.compose.push_back({2, 2, 2});
    CHECK(error_of([&] { FinCat::validate(wrong); }) == ErrorKind::CompositionDomainMismatch);
    auto out_of_range = r;
    out_of_range.morphisms.push_back({"g", 0, 7});
    CHECK(error_of([&] { FinCat::validate(out_of_range); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("interval and circle poset sizes")
{
    auto I1 = interval_category(1);
    CHECK(I1.object_count() == 2);
    CHECK(I1.morphism_count() == 3);
    auto P = corpus::circle_poset();
    CHECK(P->morphism_count() == 8);
    CHECK(P->is_thin());
    auto leq = oracle::order_relation(*P);
    std::size_t related = 0;
    for (const auto& row : leq)
        related += static_cast<std::size_t>(std::count(row.begin(), row.end(), true));
    CHECK(related == 8);
    auto PP = product_category(*P, *P);
    CHECK(PP.object_count() == 16);
    CHECK(PP.morphism_count() == 64);
}

TEST_CASE("poset closure is transitive and rejects cycles")
{
    auto c = poset_category({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK(c.morphism_count() == 6);
    CHECK(c.hom(0, 2).size() == 1);
    CHECK(error_of([] { poset_category({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }) == ErrorKind::NotAPartialOrder);
}

TEST_CASE("validated categories are associative")
{
    for (const auto& nc : corpus::fixed_categories()) {
        CAPTURE(nc.name);
        check_associative(*nc.cat);
    }
    corpus::Rng rng(11);
    for (int k = 0; k < 30; ++k)
        check_associative(*corpus::random_category(rng, 8));
}

TEST_CASE("opposite of the opposite is the original table")
{
    for (const auto& nc : corpus::fixed_categories()) {
        CAPTURE(nc.name);
        CHECK(opposite_category(opposite_category(*nc.cat)) == *nc.cat);
    }
}

TEST_CASE("functors are checked on composites and identities")
{
    auto I1 = share(interval_category(1));
    auto B2 = share(cyclic_group_category(2));
    // sends the arrow to t: fine, since nothing composes to it non-trivially
    auto u = FinFunctor::make(I1, B2, {0, 0}, {0, 1, 0});
    CHECK(u.morphism(1) == 1);
    CHECK(error_of([&] { FinFunctor::make(I1, B2, {0, 0}, {1, 1, 0}); }) == ErrorKind::NotAFunctor);
    auto id = FinFunctor::identity(B2);
    CHECK(FinFunctor::compose(id, u).morphism_map() == u.morphism_map());
}

TEST_CASE("coproducts and products")
{
    auto s = coproduct_category(interval_category(1), cyclic_group_category(2));
    CHECK(s.object_count() == 3);
    CHECK(s.morphism_count() == 5);
    auto p = product_category(interval_category(1), interval_category(1));
    CHECK(p.morphism_count() == 9);
    CHECK(p.is_thin());
}
