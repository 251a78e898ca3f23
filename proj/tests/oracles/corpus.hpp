#pragma once

// Fixed and randomized test inputs: small categories, diagrams and systems.

#include "catcoh/coeff.hpp"
#include "catcoh/fibration.hpp"

#include <random>
#include <string>

namespace corpus {

using namespace catcoh;
using Rng = std::mt19937_64;

struct NamedCategory {
    std::string name;
    CatPtr cat;
};

CatPtr circle_poset();
CatPtr group_category(std::size_t order);
// the monoid {1, e} with e∘e = e
CatPtr idempotent_monoid();
// the monoid {1, a, z} with a∘a = z and z absorbing
CatPtr nilpotent_monoid();

std::vector<NamedCategory> fixed_categories();

// at most max_morphisms morphisms
CatPtr random_category(Rng& rng, std::size_t max_morphisms = 8);

// Monoid hom Mor(I) -> (Z, ·) found by random search; all ones as fallback.
std::vector<long> random_character(const FinCat& index, Rng& rng);

// rank <= 2 data: characters, ideal functors, direct sums and unimodular
// changes of basis. character may override the random character.
Diagram random_diagram(CatPtr index, Ring ring, Variance variance, Rng& rng,
                       const std::vector<std::vector<long>>& characters = {});

// BW data on F(C) with tensor products of characters of C among the pieces.
Diagram random_bw_diagram(const FactorizationCategory& fc, Ring ring, Rng& rng);

// A pulled-back system of a random kind.
CoeffSystem random_system(CatPtr c, Ring ring, Variance variance, Rng& rng);

// Random functor into c from a small category (identity, constants, projections,
// inclusions, fiber and comma functors).
FinFunctor random_functor_into(CatPtr c, Rng& rng);

struct NamedFibration {
    std::string name;
    SplitFibration fibration;
};

// product, point base, point fiber, the three-object example and a few more
std::vector<NamedFibration> fibration_corpus();

// 1 -> [1] picking the terminal object
FinFunctor non_fibration();

} // namespace corpus
