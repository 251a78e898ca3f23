#pragma once

// Factorization categories, comma categories and fiber categories.

#include "catcoh/fincat.hpp"

#include <map>
#include <tuple>

namespace catcoh {

// F(C): objects are the morphisms of C (same indices); a morphism f -> f'
// is a pair (alpha, beta) of morphisms of C with f' = beta∘f∘alpha.
struct FactorizationCategory {
    struct Pair {
        std::size_t source; // object f of F(C), a morphism of C
        std::size_t alpha;  // src f' -> src f
        std::size_t beta;   // dst f -> dst f'
    };

    CatPtr base;
    CatPtr category;
    // C^op x C, the target of the forgetful functor
    CatPtr twisted;
    // f |-> (src f, dst f), (alpha, beta) |-> (alpha, beta)
    FinFunctor forget;
    std::vector<Pair> pairs;

    // morphism (alpha, beta) out of f, if f' = beta∘f∘alpha is defined
    std::optional<std::size_t> find(std::size_t f, std::size_t alpha, std::size_t beta) const;

    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> index;
};

FactorizationCategory factorization_category(CatPtr c);

// F(u): F(E) -> F(B)
FinFunctor factorization_functor(const FinFunctor& u, const FactorizationCategory& fe, const FactorizationCategory& fb);

// b/u for u: E -> B (objects (e, phi: b -> u e)) or, dually, u/b (objects
// (e, psi: u e -> b)).
struct CommaCategory {
    enum class Side { Under, Over };

    Side side = Side::Under;
    std::size_t base_object = 0;
    CatPtr category;
    // Q^b: the projection to E
    FinFunctor forget;
    // per comma object: (e, phi or psi)
    std::vector<std::pair<std::size_t, std::size_t>> objects;

    std::optional<std::size_t> find_object(std::size_t e, std::size_t structure) const;
};

CommaCategory comma_under(const FinFunctor& u, std::size_t b);
CommaCategory comma_over(const FinFunctor& u, std::size_t b);

// For beta: b -> b', the functor b'/u -> b/u sending (e, phi) to (e, phi∘beta).
FinFunctor comma_precomposition(const FinFunctor& u, std::size_t beta, const CommaCategory& under_b,
                                const CommaCategory& under_b_prime);
// For beta: b -> b', the functor u/b -> u/b' sending (e, psi) to (e, beta∘psi).
FinFunctor comma_postcomposition(const FinFunctor& u, std::size_t beta, const CommaCategory& over_b,
                                 const CommaCategory& over_b_prime);

// E_b = u^{-1}(b): objects over b and morphisms over id_b.
struct FiberCategory {
    std::size_t base_object = 0;
    CatPtr category;
    // i_b: E_b -> E
    FinFunctor inclusion;
};

FiberCategory fiber_category(const FinFunctor& u, std::size_t b);

// j_b: E_b -> b/u, e |-> (e, id_b)
FinFunctor fiber_to_comma(const FinFunctor& u, const FiberCategory& fiber, const CommaCategory& under_b);

// Explicit table bijection check: same counts and the given maps are
// bijections compatible with src/dst/identities/composition.
bool is_isomorphism(const FinFunctor& u);

} // namespace catcoh
