#include "helpers.hpp"

#include "catcoh/linalg.hpp"

using namespace testing;

namespace {

IntMatrix int_mat(std::vector<std::vector<long>> rows)
{
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(i, j) = rows[i][j];
    return m;
}

IntMatrix random_int(corpus::Rng& rng, std::size_t r, std::size_t c)
{
    IntMatrix m(r, c);
    std::uniform_int_distribution<long> d(-4, 4);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = rng() % 3 == 0 ? 0 : d(rng);
    return m;
}

void check_smith(const IntMatrix& a)
{
    auto s = smith_normal_form(a);
    CHECK(s.U * a * s.V == s.D);
    auto du = determinant(s.U);
    auto dv = determinant(s.V);
    CHECK(abs(du) == 1);
    CHECK(abs(dv) == 1);
    auto diag = s.diagonal();
    for (std::size_t i = 0; i + 1 < diag.size(); ++i)
        CHECK(diag[i + 1] % diag[i] == 0);
    for (std::size_t i = 0; i < s.D.rows(); ++i)
        for (std::size_t j = 0; j < s.D.cols(); ++j)
            if (i != j)
                CHECK(s.D(i, j) == 0);
}

} // namespace

TEST_CASE("smith normal form examples")
{
    auto a = smith_normal_form(int_mat({{2}}));
    CHECK(a.diagonal() == std::vector<Integer>{2});
    auto b = smith_normal_form(int_mat({{2, 4}, {6, 8}}));
    CHECK(b.diagonal() == std::vector<Integer>{2, 4});
    check_smith(int_mat({{2, 4}, {6, 8}}));
    auto z = smith_normal_form(IntMatrix(3, 2));
    CHECK(z.rank() == 0);
    CHECK(z.D == IntMatrix(3, 2));
}

TEST_CASE("smith normal form on random matrices against the oracle")
{
    corpus::Rng rng(23);
    for (int k = 0; k < 60; ++k) {
        auto a = random_int(rng, 1 + rng() % 5, 1 + rng() % 5);
        check_smith(a);
        oracle::IntRows rows(a.rows(), std::vector<Integer>(a.cols()));
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j)
                rows[i][j] = a(i, j);
        auto expected = oracle::smith_diagonal(rows);
        CHECK(smith_normal_form(a).diagonal() == expected);
        std::sort(expected.begin(), expected.end());
        auto dense = invariant_factors(a);
        auto sparse = invariant_factors(SparseMatrix::from_dense(to_exact(a)));
        std::sort(dense.begin(), dense.end());
        std::sort(sparse.begin(), sparse.end());
        CHECK(dense == expected);
        CHECK(sparse == expected);
    }
}

TEST_CASE("determinant against permutation expansion")
{
    corpus::Rng rng(29);
    for (int k = 0; k < 40; ++k) {
        std::size_t n = 1 + rng() % 5;
        auto m = random_int(rng, n, n);
        CHECK(Rational(determinant(m)) == oracle::leibniz_determinant(to_exact(m)));
    }
}

TEST_CASE("rank, kernels and inverses")
{
    corpus::Rng rng(31);
    for (int k = 0; k < 40; ++k) {
        auto ai = random_int(rng, 1 + rng() % 5, 1 + rng() % 5);
        auto a = to_exact(ai);
        auto r = rank(a);
        CHECK(r == rank(SparseMatrix::from_dense(a)));
        auto kernel = kernel_basis(a);
        CHECK(kernel.cols() == a.cols() - r);
        CHECK((a * kernel) == ExactMatrix(a.rows(), kernel.cols()));
        auto ik = integer_kernel_basis(ai);
        CHECK(ik.cols() == a.cols() - r);
        CHECK((ai * ik) == IntMatrix(a.rows(), ik.cols()));
        if (a.rows() == a.cols() && r == a.rows())
            CHECK(a * inverse(a) == ExactMatrix::identity(a.rows()));
    }
}
