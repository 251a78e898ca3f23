#pragma once

// Split Grothendieck fibrations from strict functors B^op -> Cat, the
// cartesian-lift test, locality of coefficients, and fiberwise E2 pages.

#include "catcoh/kan.hpp"

#include <array>
#include <map>
#include <tuple>

namespace catcoh {

// G: B^op -> Cat. transports[φ] is G(φ): G(dst φ) -> G(src φ).
struct StrictFunctor {
    CatPtr base;
    std::vector<CatPtr> fibers;
    std::vector<FinFunctor> transports;
};

// Checks G(id) = id and G(ψ∘φ) = G(φ)∘G(ψ) on tables.
void validate_strict_functor(const StrictFunctor& g);

struct SplitFibration {
    StrictFunctor g;
    CatPtr total;
    FinFunctor projection;
    // object e of E is (b, x ∈ G(b)); morphism is (φ, m: x -> G(φ)(x'))
    std::vector<std::pair<std::size_t, std::size_t>> objects;
    std::vector<std::pair<std::size_t, std::size_t>> morphisms;

    const CatPtr& base() const { return g.base; }
    std::size_t object_index(std::size_t b, std::size_t x) const;
    // the chosen cartesian lift (φ, id): (src φ, G(φ)x') -> (dst φ, x') of φ at e' = (dst φ, x')
    std::size_t cleavage(std::size_t e_prime, std::size_t phi) const;

    std::vector<std::size_t> object_offsets;
    // (φ, m, x') -> morphism of E
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> morphism_lookup;
};

SplitFibration grothendieck_construction(StrictFunctor g);

struct FibrationCertificate {
    bool is_fibration = false;
    // (e', φ, λ) with λ a cartesian lift of φ ending at e'
    std::vector<std::array<std::size_t, 3>> lifts;
    // (e', φ) without a cartesian lift
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

// Exhaustive check of the universal property of cartesian lifts.
FibrationCertificate is_grothendieck_fibration(const FinFunctor& u);
bool is_cartesian(const FinFunctor& u, std::size_t lambda);

struct LocalityReport {
    std::size_t base_object = 0;
    std::size_t degree = 0;
    HomologyGroup comma_group;
    HomologyGroup fiber_group;
    std::size_t map_rank = 0;
    bool injective = false;
    bool surjective = false;
    bool isomorphism = false;
};

// Compares (co)homology of b/u with F∘Q^b and of E_b with F∘i_b through the
// map induced by j_b: E_b -> b/u. Works for any functor u; rational module-type F.
LocalityReport locality_check(const FinFunctor& u, const CoeffSystem& f, std::size_t b, std::size_t q);

// F_B is a module (or trivial) system on B of either variance; the page uses
// F = F_B∘u on the total category.
E2Page fibration_e2(const SplitFibration& fib, const CoeffSystem& f_base, std::size_t pmax, std::size_t qmax);

// Finds F_B with F = F_B∘u when F is trivial or pulled back from the base.
CoeffSystem base_coefficients(const SplitFibration& fib, const CoeffSystem& f);

// The system b |-> H^q(E_b, F∘i_b) (or H_q) on B, with transports along the cleavage.
CoeffSystem fiberwise_coefficients(const SplitFibration& fib, const CoeffSystem& f_base, std::size_t q);

} // namespace catcoh
