#pragma once

// Coefficient systems on the simplex category Δ/C.
//
// A pulled-back system is classical data on one of the categories of the
// ladder Δ/C -> F(C) -> C^op x C -> C -> G -> 1, read back along the
// ladder. A truncated system lists values and coface maps up to a fixed
// dimension.

#include "catcoh/limits.hpp"
#include "catcoh/simplex.hpp"

#include <functional>
#include <memory>
#include <optional>

namespace catcoh {

enum class CoeffKind { BW, Bimodule, Module, Local, Trivial, Truncated };

std::string_view to_string(CoeffKind kind);
CoeffKind parse_coeff_kind(std::string_view text);

// Ranks and coface maps indexed by nerve position.
// cofaces[n][k][i] is the map along δ^i for the k-th n-simplex g (n >= 1):
// T(g∘δ^i) -> T(g) when covariant, T(g) -> T(g∘δ^i) when contravariant.
struct TruncatedTables {
    std::size_t max_dim = 0;
    std::vector<std::vector<std::size_t>> ranks;
    std::vector<std::vector<std::vector<ExactMatrix>>> cofaces;
};

class CoeffSystem {
public:
    // data lives on F(C), C^op x C, C, G or 1 according to kind; its variance
    // is the variance of the system. localization is q: C -> G for Local.
    static CoeffSystem pullback(CoeffKind kind, CatPtr base, Diagram data,
                                std::optional<FinFunctor> localization = std::nullopt);
    static CoeffSystem truncated(CatPtr base, Ring ring, Variance variance, TruncatedTables tables);
    // constant value R^rank with identity maps
    static CoeffSystem trivial(CatPtr base, Ring ring, Variance variance, std::size_t rank = 1);

    const CatPtr& base() const noexcept { return base_; }
    Ring ring() const noexcept { return ring_; }
    Variance variance() const noexcept { return variance_; }
    CoeffKind kind() const noexcept { return kind_; }
    bool is_pulled_back() const noexcept { return kind_ != CoeffKind::Truncated; }
    // highest dimension with data; unbounded for pulled-back systems
    std::optional<std::size_t> max_dim() const;

    const Diagram& data() const;
    const FactorizationCategory& factorization() const;
    const FinFunctor& localization() const;
    const TruncatedTables& tables() const;

    std::size_t evaluate(const Simplex& s) const;
    // covariant: T(source) -> T(target); contravariant: T(target) -> T(source)
    ExactMatrix induced_map(const SimplexMorphism& sigma) const;
    // induced_map along δ^i : g∘δ^i -> g
    ExactMatrix coface_map(const Simplex& g, std::size_t i) const;

    // image of a simplex / simplex morphism in the data's index category
    std::size_t index_object(const Simplex& s) const;
    std::size_t index_morphism(const SimplexMorphism& sigma) const;

    // The same system read over another ring; Z requires integral data.
    CoeffSystem with_ring(Ring ring) const;

private:
    CoeffSystem() = default;

    CatPtr base_;
    Ring ring_ = Ring::Integers;
    Variance variance_ = Variance::Covariant;
    CoeffKind kind_ = CoeffKind::Trivial;
    std::shared_ptr<const Diagram> data_;
    std::shared_ptr<const FactorizationCategory> fc_;
    std::shared_ptr<const FinFunctor> q_;
    std::shared_ptr<const TruncatedTables> tables_;
};

// Validates data against an index category, reporting NonFunctorialData.
Diagram coefficient_data(CatPtr index, Ring ring, Variance variance, std::vector<std::size_t> ranks,
                         std::vector<ExactMatrix> maps);

// Index categories of the ladder for a base category.
CatPtr bimodule_index(const FinCat& c);

// T∘Δ/i for i: D -> E.
CoeffSystem restrict_system(const CoeffSystem& t, const FinFunctor& i);

// Tables of a system through max_dim.
CoeffSystem sample_truncated(const CoeffSystem& t, std::size_t max_dim);

// A morphism (φ, τ) of coefficient systems.
// Covariant: φ: C2 -> C1 and τ_g: T1(φ∘g) -> T2(g) for simplices g of C2.
// Contravariant: φ: C1 -> C2 and τ_f: T1(f) -> T2(φ∘f) for simplices f of C1.
// source is T1, target is T2.
class CoeffMorphism {
public:
    using Component = std::function<ExactMatrix(const Simplex&)>;

    // checks naturality along cofaces (and codegeneracies for pulled-back
    // systems) on simplices of dimension <= check_dim
    static CoeffMorphism make(FinFunctor phi, std::shared_ptr<const CoeffSystem> source,
                              std::shared_ptr<const CoeffSystem> target, Component tau, std::size_t check_dim);
    static CoeffMorphism identity(std::shared_ptr<const CoeffSystem> t);

    const FinFunctor& phi() const noexcept { return phi_; }
    const CoeffSystem& source() const { return *source_; }
    const CoeffSystem& target() const { return *target_; }
    Variance variance() const { return source_->variance(); }
    ExactMatrix component(const Simplex& s) const { return tau_(s); }

private:
    FinFunctor phi_;
    std::shared_ptr<const CoeffSystem> source_;
    std::shared_ptr<const CoeffSystem> target_;
    Component tau_;
};

} // namespace catcoh
