#pragma once

// Simplices of the nerve as chains of composable morphisms, order-preserving
// maps acting on them, and the comparison functor to the factorization category.

#include "catcoh/constructions.hpp"

#include <compare>
#include <vector>

namespace catcoh {

// The diagram C_0 <-f1- C_1 <-f2- ... <-fn- C_n. vertex is C_0, which for a
// 0-simplex is the only datum.
struct Simplex {
    std::vector<std::size_t> chain;
    std::size_t vertex = 0;

    std::size_t dim() const noexcept { return chain.size(); }
    // C_k
    std::size_t object(const FinCat& c, std::size_t k) const;

    friend auto operator<=>(const Simplex&, const Simplex&) = default;
    friend bool operator==(const Simplex&, const Simplex&) = default;
};

Simplex make_simplex(const FinCat& c, std::vector<std::size_t> chain);
Simplex vertex_simplex(std::size_t object);

// "f1.f2.f3", or the object name for a 0-simplex
std::string simplex_key(const FinCat& c, const Simplex& s);

// Order-preserving map [source_dim] -> [target_dim] given by its values.
struct OrderMap {
    std::vector<std::size_t> values;
    std::size_t target_dim = 0;

    std::size_t source_dim() const noexcept { return values.size() - 1; }
    bool is_injective() const;
    bool is_identity() const;

    static OrderMap make(std::vector<std::size_t> values, std::size_t target_dim);
    static OrderMap identity(std::size_t n);
    // δ^i : [n-1] -> [n], skipping i
    static OrderMap coface(std::size_t n, std::size_t i);
    // σ^i : [n+1] -> [n], repeating i
    static OrderMap codegeneracy(std::size_t n, std::size_t i);

    friend bool operator==(const OrderMap&, const OrderMap&) = default;
};

// a∘b
OrderMap compose(const OrderMap& a, const OrderMap& b);

// All order-preserving maps [n] -> [m].
std::vector<OrderMap> all_order_maps(std::size_t n, std::size_t m);

// g∘σ
Simplex apply_simplex_map(const FinCat& c, const OrderMap& sigma, const Simplex& g);

// σ: source -> target in Δ/C, i.e. source = target∘σ.
struct SimplexMorphism {
    Simplex source;
    Simplex target;
    OrderMap map;

    static SimplexMorphism make(const FinCat& c, Simplex source, Simplex target, OrderMap map);
    // the morphism g∘σ -> g
    static SimplexMorphism along(const FinCat& c, const OrderMap& sigma, const Simplex& g);
};

// Memoized, lexicographic in morphism indices; safe to call concurrently.
const std::vector<Simplex>& nerve_level(const FinCat& c, std::size_t n);
const std::vector<Simplex>& nondegenerate_level(const FinCat& c, std::size_t n);
std::size_t simplex_index(const FinCat& c, const Simplex& s);

bool is_degenerate(const FinCat& c, const Simplex& s);

Simplex delta_u(const FinFunctor& u, const Simplex& s);

// composite f1∘...∘fn (identity of the vertex for n = 0)
std::size_t nu_object(const FinCat& c, const Simplex& s);

struct FactorizationPair {
    std::size_t alpha;
    std::size_t beta;
};

// (α, β) with ν(target) = β∘ν(source)∘α
FactorizationPair nu_morphism(const FinCat& c, const SimplexMorphism& sigma);
// the same pair as a morphism of F(C)
std::size_t nu_morphism_index(const FactorizationCategory& fc, const SimplexMorphism& sigma);

} // namespace catcoh
