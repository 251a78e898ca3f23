#pragma once

// Limits and colimits of finite diagrams of free modules.

#include "catcoh/fincat.hpp"
#include "catcoh/homology.hpp"

namespace catcoh {

// A functor J -> free modules (covariant) or J^op -> free modules
// (contravariant). maps[m] is F(m): F(src m) -> F(dst m) when covariant and
// F(dst m) -> F(src m) when contravariant.
class Diagram {
public:
    static Diagram make(CatPtr index, Ring ring, Variance variance, std::vector<std::size_t> ranks,
                        std::vector<ExactMatrix> maps);

    const CatPtr& index() const noexcept { return index_; }
    Ring ring() const noexcept { return ring_; }
    Variance variance() const noexcept { return variance_; }
    std::size_t rank(std::size_t j) const { return ranks_.at(j); }
    const std::vector<std::size_t>& ranks() const noexcept { return ranks_; }
    const ExactMatrix& map(std::size_t m) const { return maps_.at(m); }

    // domain and codomain objects of F(m)
    std::size_t map_source(std::size_t m) const;
    std::size_t map_target(std::size_t m) const;

private:
    Diagram() = default;

    CatPtr index_;
    Ring ring_ = Ring::Integers;
    Variance variance_ = Variance::Covariant;
    std::vector<std::size_t> ranks_;
    std::vector<ExactMatrix> maps_;
};

struct LimitResult {
    HomologyGroup group;
    // columns: a basis of the limit inside the direct sum of all F(j)
    ExactMatrix basis;
    // cone maps, one per object of J, limit -> F(j)
    std::vector<ExactMatrix> projections;
};

struct ColimitResult {
    HomologyGroup group;
};

LimitResult finite_limit(const Diagram& d);
ColimitResult finite_colimit(const Diagram& d);

} // namespace catcoh
