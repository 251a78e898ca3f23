#pragma once

// Independent reference computations used to check the engine.

#include "catcoh/fincat.hpp"
#include "catcoh/homology.hpp"

#include <vector>

namespace oracle {

using catcoh::HomologyGroup;
using catcoh::Integer;
using IntRows = std::vector<std::vector<Integer>>;

// Invariant factors (all nonzero diagonal entries) of a dense integer matrix.
std::vector<Integer> smith_diagonal(IntRows a);

// bd[n] : C_n -> C_{n-1} for n = 1..top, as rows x cols = dims[n-1] x dims[n].
// Groups in degrees 0..top-1.
std::vector<HomologyGroup> homology_from_boundaries(const std::vector<std::size_t>& dims,
                                                    const std::vector<IntRows>& bd);
std::vector<HomologyGroup> cohomology_from_boundaries(const std::vector<std::size_t>& dims,
                                                      const std::vector<IntRows>& bd);

// Integral group (co)homology with trivial coefficients from the inhomogeneous
// bar complex; mult[g][h] = gh, element 0 is the unit. Degrees 0..top.
std::vector<HomologyGroup> bar_group_cohomology(const std::vector<std::vector<std::size_t>>& mult, std::size_t top);
std::vector<HomologyGroup> bar_group_homology(const std::vector<std::vector<std::size_t>>& mult, std::size_t top);

// Simplicial (co)homology of the order complex of a finite poset (strict chains);
// leq[x][y] is x <= y. Degrees 0..top.
std::vector<HomologyGroup> order_complex_cohomology(const std::vector<std::vector<bool>>& leq, std::size_t top);
std::vector<HomologyGroup> order_complex_homology(const std::vector<std::vector<bool>>& leq, std::size_t top);

// Composable n-tuples found by scanning all tuples of morphisms.
std::size_t count_nerve(const catcoh::FinCat& c, std::size_t n);
std::size_t count_nondegenerate_nerve(const catcoh::FinCat& c, std::size_t n);

// Objects and morphisms of the factorization category by direct counting.
std::pair<std::size_t, std::size_t> count_factorization(const catcoh::FinCat& c);

// Objects of b/u: pairs (e, b -> u(e)).
std::size_t count_under(const catcoh::FinFunctor& u, std::size_t b);

// Permutation expansion.
catcoh::Rational leibniz_determinant(const catcoh::ExactMatrix& m);

// leq table of a thin category
std::vector<std::vector<bool>> order_relation(const catcoh::FinCat& c);

} // namespace oracle
