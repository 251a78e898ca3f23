#include "helpers.hpp"

using namespace testing;

namespace {

SparseMatrix sparse(std::vector<std::vector<long>> rows, std::size_t cols_if_empty = 0)
{
    return SparseMatrix::from_dense(mat(std::move(rows), cols_if_empty));
}

} // namespace

TEST_CASE("single free module with zero maps")
{
    auto k = FreeComplex::make(Ring::Integers, Orientation::Cochain, {1}, {sparse({}, 1)});
    CHECK(complex_homology(k, 0).group == Z());
    CHECK_FALSE(complex_homology(k, 0).upper_truncation_unsafe);
}

TEST_CASE("multiplication by two")
{
    auto k = FreeComplex::make(Ring::Integers, Orientation::Cochain, {1, 1}, {sparse({{2}})});
    CHECK(complex_homology(k, 0).group == Z(0));
    CHECK(complex_homology(k, 1).group == torsion(2));
    CHECK(complex_homology(k, 1).upper_truncation_unsafe);
    auto q = FreeComplex::make(Ring::Rationals, Orientation::Cochain, {1, 1}, {sparse({{2}})});
    CHECK(complex_homology(q, 1).group == Z(0));
}

TEST_CASE("d∘d must vanish")
{
    auto kind = error_of([] {
        FreeComplex::make(Ring::Integers, Orientation::Cochain, {1, 1, 1}, {sparse({{1}}), sparse({{1}})});
    });
    CHECK(kind == ErrorKind::InternalInvariant);
}

TEST_CASE("integrality is required over Z")
{
    auto half = SparseMatrix::from_dense(ExactMatrix::scalar(1, Rational(1, 2)));
    CHECK(error_of([&] { FreeComplex::make(Ring::Integers, Orientation::Cochain, {1, 1}, {half}); }) ==
          ErrorKind::NotIntegral);
}

TEST_CASE("homology groups print and compare")
{
    CHECK(to_string(torsion(2)) == "Z/2");
    CHECK(to_string(Z(0)) == "0");
    CHECK(to_string(Z(2), Ring::Rationals) == "Q^2");
    CHECK(torsion(2) != Z(0));
}

TEST_CASE("homology bases and induced maps")
{
    // Z --0--> Z^2 --[1 1]--> Z: H^1 has rank one, spanned by (1, -1)
    auto k = FreeComplex::make(Ring::Rationals, Orientation::Cochain, {1, 2, 1},
                               {sparse({{0}, {0}}), sparse({{1, 1}})});
    auto basis = homology_basis(k, 1);
    CHECK(basis.representatives.cols() == 1);
    auto rep = basis.representatives;
    CHECK(rep(0, 0) == -rep(1, 0));
    auto identity = induced_on_homology(basis, basis, ExactMatrix::identity(2));
    CHECK(identity == ExactMatrix::identity(1));
}
