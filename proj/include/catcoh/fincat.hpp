#pragma once

// Finite categories given by total enumeration, and functors between them.

#include "catcoh/error.hpp"

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace catcoh {

namespace detail {
struct NerveCache;
std::shared_ptr<NerveCache> make_nerve_cache();
} // namespace detail

struct MorphismInfo {
    std::string name;
    std::size_t src = 0;
    std::size_t dst = 0;
};

// Unvalidated tables. compose holds triples (g, f, g∘f) by morphism index.
// identities, when non-empty, names the identity morphism of every object;
// when empty the identity is searched for among the endomorphisms.
struct RawCategory {
    std::vector<std::string> objects;
    std::vector<MorphismInfo> morphisms;
    std::vector<std::array<std::size_t, 3>> compose;
    std::vector<std::size_t> identities;
};

// Adds the composites id∘f = f and f∘id = f wherever the table is silent.
// Requires raw.identities to be filled.
void fill_identity_compositions(RawCategory& raw);

class FinCat {
public:
    static FinCat validate(RawCategory raw);

    std::size_t object_count() const noexcept { return objects_.size(); }
    std::size_t morphism_count() const noexcept { return morphisms_.size(); }

    const std::string& object_name(std::size_t obj) const { return objects_.at(obj); }
    const MorphismInfo& morphism(std::size_t m) const { return morphisms_.at(m); }
    const std::string& morphism_name(std::size_t m) const { return morphisms_.at(m).name; }
    std::size_t src(std::size_t m) const { return morphisms_[m].src; }
    std::size_t dst(std::size_t m) const { return morphisms_[m].dst; }
    std::size_t identity(std::size_t obj) const { return identity_.at(obj); }
    bool is_identity(std::size_t m) const { return identity_[morphisms_[m].src] == m; }

    // g∘f, defined iff dst(f) == src(g)
    std::optional<std::size_t> try_compose(std::size_t g, std::size_t f) const;
    std::size_t compose(std::size_t g, std::size_t f) const;
    // f_1∘f_2∘...∘f_k; an empty chain is not allowed
    std::size_t compose_chain(const std::vector<std::size_t>& chain) const;

    const std::vector<std::size_t>& hom(std::size_t a, std::size_t b) const { return hom_[a * objects_.size() + b]; }
    const std::vector<std::size_t>& morphisms_from(std::size_t a) const { return out_.at(a); }
    const std::vector<std::size_t>& morphisms_into(std::size_t b) const { return in_.at(b); }

    std::optional<std::size_t> find_object(const std::string& name) const;
    std::optional<std::size_t> find_morphism(const std::string& name) const;

    bool is_thin() const;
    bool is_groupoid() const;
    // inverse of m when m is an isomorphism
    std::optional<std::size_t> inverse(std::size_t m) const;

    // Raw tables that validate() back to an equal category.
    RawCategory raw() const;

    detail::NerveCache& nerve_cache() const { return *nerve_cache_; }

    friend bool operator==(const FinCat& a, const FinCat& b);

private:
    FinCat() = default;

    std::vector<std::string> objects_;
    std::vector<MorphismInfo> morphisms_;
    std::vector<std::size_t> identity_;
    std::vector<std::vector<std::size_t>> hom_;
    std::vector<std::vector<std::size_t>> out_;
    std::vector<std::vector<std::size_t>> in_;
    // position of each morphism within out_[src]
    std::vector<std::size_t> out_position_;
    // compose_[f][out_position_[g]] = g∘f
    std::vector<std::vector<std::size_t>> compose_;
    std::shared_ptr<detail::NerveCache> nerve_cache_;
};

using CatPtr = std::shared_ptr<const FinCat>;

inline CatPtr share(FinCat c) { return std::make_shared<const FinCat>(std::move(c)); }

// Standard categories.
FinCat terminal_category();
FinCat empty_category();
// [n] = {0 < 1 < ... < n}
FinCat interval_category(std::size_t n);
// Reflexive-transitive closure of the generating relations (pairs of names).
FinCat poset_category(const std::vector<std::string>& objects,
                      const std::vector<std::pair<std::string, std::string>>& relations);
// One-object category; table[g][f] is the index of g·f.
FinCat monoid_category(const std::vector<std::string>& elements, const std::vector<std::vector<std::size_t>>& table);
FinCat cyclic_group_category(std::size_t order);
FinCat opposite_category(const FinCat& c);
FinCat product_category(const FinCat& c, const FinCat& d);
FinCat coproduct_category(const FinCat& c, const FinCat& d);

// Objects (x,y) of a product sit at index x * |Ob D| + y; morphisms likewise.
inline std::size_t product_index(std::size_t i, std::size_t j, std::size_t right_count) { return i * right_count + j; }

class FinFunctor {
public:
    // empty placeholder; only assignment from a made functor is meaningful
    FinFunctor() = default;

    static FinFunctor make(CatPtr source, CatPtr target, std::vector<std::size_t> object_map,
                           std::vector<std::size_t> morphism_map);
    // morphism map forced by the objects; requires a thin target
    static FinFunctor from_object_map(CatPtr source, CatPtr target, std::vector<std::size_t> object_map);
    static FinFunctor identity(CatPtr c);
    static FinFunctor constant(CatPtr source, CatPtr target, std::size_t object);
    // g∘f
    static FinFunctor compose(const FinFunctor& g, const FinFunctor& f);

    const CatPtr& source() const noexcept { return source_; }
    const CatPtr& target() const noexcept { return target_; }
    std::size_t object(std::size_t obj) const { return object_map_.at(obj); }
    std::size_t morphism(std::size_t m) const { return morphism_map_.at(m); }
    const std::vector<std::size_t>& object_map() const noexcept { return object_map_; }
    const std::vector<std::size_t>& morphism_map() const noexcept { return morphism_map_; }

    // u^op : C^op -> D^op given the opposite categories (indices are shared)
    FinFunctor opposite(CatPtr source_op, CatPtr target_op) const;

private:
    CatPtr source_;
    CatPtr target_;
    std::vector<std::size_t> object_map_;
    std::vector<std::size_t> morphism_map_;
};

// Projections out of a product category built by product_category.
FinFunctor product_projection(CatPtr product, CatPtr left, CatPtr right, int which);
FinFunctor product_functor(const FinFunctor& u, const FinFunctor& v, CatPtr source_product, CatPtr target_product);

} // namespace catcoh
