#pragma once

// Bounded complexes of free modules and their (co)homology.

#include "catcoh/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace catcoh {

struct HomologyGroup {
    std::size_t free_rank = 0;
    // invariant factors d1 | d2 | ..., each > 1
    std::vector<Integer> torsion;

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

// "0", "Z^2 + Z/2 + Z/4", "Q^3"
std::string to_string(const HomologyGroup& h, Ring ring = Ring::Integers);

enum class Orientation { Cochain, Chain };

// Degrees 0..top. maps[n] joins degrees n and n+1: for a cochain complex it
// is d: C^n -> C^{n+1} (dims[n+1] x dims[n]); for a chain complex it is
// d: C_{n+1} -> C_n (dims[n] x dims[n+1]). When maps has top+1 entries the
// last one joins the top degree to an unlisted degree top+1 and makes the
// top degree safe to report.
class FreeComplex {
public:
    static FreeComplex make(Ring ring, Orientation orientation, std::vector<std::size_t> dims,
                            std::vector<SparseMatrix> maps);

    Ring ring() const noexcept { return ring_; }
    Orientation orientation() const noexcept { return orientation_; }
    std::size_t top_degree() const noexcept { return dims_.size() - 1; }
    const std::vector<std::size_t>& dims() const noexcept { return dims_; }
    const std::vector<SparseMatrix>& maps() const noexcept { return maps_; }
    bool has_beyond_top() const noexcept { return maps_.size() == dims_.size(); }

    // the differential leaving degree n (cochain) or arriving at degree n from n+1 (chain)
    const SparseMatrix* map_above(std::size_t n) const { return n < maps_.size() ? &maps_[n] : nullptr; }

private:
    FreeComplex() = default;

    Ring ring_ = Ring::Integers;
    Orientation orientation_ = Orientation::Cochain;
    std::vector<std::size_t> dims_;
    std::vector<SparseMatrix> maps_;
};

struct HomologyReport {
    HomologyGroup group;
    bool upper_truncation_unsafe = false;
};

HomologyReport complex_homology(const FreeComplex& k, std::size_t n);
// every degree at once, sharing the reductions of each map
std::vector<HomologyReport> complex_homology_all(const FreeComplex& k);

// Over Q: cycle representatives of a basis of H_n and the coordinate map that
// sends a cycle to the coordinates of its class.
struct HomologyBasis {
    ExactMatrix representatives; // dims[n] x h
    ExactMatrix coordinates;     // h x dims[n]

    std::size_t dimension() const { return representatives.cols(); }
};

HomologyBasis homology_basis(const FreeComplex& k, std::size_t n);

// The map H(from) -> H(to) induced by a chain map in the given degree.
ExactMatrix induced_on_homology(const HomologyBasis& from, const HomologyBasis& to, const ExactMatrix& chain_map);

} // namespace catcoh
