#include "helpers.hpp"

using namespace testing;

TEST_CASE("limit over the point")
{
    auto d = Diagram::make(share(terminal_category()), Ring::Integers, Variance::Covariant, {2},
                           {ExactMatrix::identity(2)});
    CHECK(finite_limit(d).group == Z(2));
    CHECK(finite_colimit(Diagram::make(share(terminal_category()), Ring::Integers, Variance::Contravariant, {2},
                                       {ExactMatrix::identity(2)}))
              .group == Z(2));
}

TEST_CASE("limit over a category with an initial object is the initial value")
{
    auto I = share(interval_category(1));
    std::vector<ExactMatrix> maps(3);
    maps[mor(*I, "id_0")] = ExactMatrix::identity(1);
    maps[mor(*I, "id_1")] = ExactMatrix::identity(1);
    maps[mor(*I, "0<1")] = mat({{2}});
    auto d = Diagram::make(I, Ring::Integers, Variance::Covariant, {1, 1}, maps);
    auto lim = finite_limit(d);
    CHECK(lim.group == Z());
    // the projection to the initial object is an isomorphism
    CHECK(lim.projections[obj(*I, "0")] == ExactMatrix::identity(1) * lim.projections[obj(*I, "0")]);
    CHECK(abs(lim.projections[obj(*I, "0")](0, 0)) == 1);
}

TEST_CASE("sign representation of Z/2")
{
    auto B = share(cyclic_group_category(2));
    std::vector<ExactMatrix> maps{ExactMatrix::identity(1), mat({{-1}})};
    auto cov = Diagram::make(B, Ring::Integers, Variance::Covariant, {1}, maps);
    auto con = Diagram::make(B, Ring::Integers, Variance::Contravariant, {1}, maps);
    CHECK(finite_limit(cov).group == Z(0));
    CHECK(finite_colimit(con).group == torsion(2));
}

TEST_CASE("non-functorial data is rejected")
{
    auto B = share(cyclic_group_category(2));
    std::vector<ExactMatrix> maps{ExactMatrix::identity(1), mat({{2}})};
    CHECK(error_of([&] { Diagram::make(B, Ring::Integers, Variance::Covariant, {1}, maps); }) ==
          ErrorKind::NonFunctorialDiagram);
    std::vector<ExactMatrix> bad_id{mat({{3}}), mat({{1}})};
    CHECK(error_of([&] { Diagram::make(B, Ring::Integers, Variance::Covariant, {1}, bad_id); }) ==
          ErrorKind::NonFunctorialDiagram);
}

TEST_CASE("degree zero is the limit for two components")
{
    auto P = corpus::circle_poset();
    auto PP = share(coproduct_category(*P, *P));
    auto t = CoeffSystem::trivial(PP, Ring::Integers, Variance::Covariant);
    CHECK(cohomology(t, 0) == Z(2));
    CHECK(finite_limit(low_degree_diagram(t)).group == Z(2));
}

TEST_CASE("H_0 of Z/2 is Z")
{
    auto B = share(cyclic_group_category(2));
    auto t = CoeffSystem::trivial(B, Ring::Integers, Variance::Contravariant);
    CHECK(homology(t, 0) == Z());
    CHECK(homology(t, 0) == oracle::bar_group_homology(cyclic_table(2), 0)[0]);
    CHECK(finite_colimit(low_degree_diagram(t)).group == Z());
}
