#pragma once

// Derived Kan extensions along u: E -> B through comma categories, and E2
// pages of the associated spectral sequences.

#include "catcoh/complexes.hpp"

namespace catcoh {

// Object b |-> H^q(b/u, F∘Q^b) (covariant F, right Kan extension), or
// b |-> H_q(b/u, F∘Q^b) (contravariant F, left Kan extension along u^op).
// Transports are covariant on B in the first case and contravariant in the
// second; they exist over Q only.
struct DerivedImage {
    FinFunctor u;
    std::size_t degree = 0;
    Variance variance = Variance::Covariant;
    Ring ring = Ring::Rationals;
    std::vector<HomologyGroup> values;
    // per morphism β: b -> b' of B; empty over Z
    std::vector<ExactMatrix> transports;

    // the image as module coefficients on B (Q only)
    CoeffSystem as_module() const;
};

DerivedImage derived_right_kan(const FinFunctor& u, const CoeffSystem& f, std::size_t q);
DerivedImage derived_left_kan(const FinFunctor& u, const CoeffSystem& f, std::size_t q);

struct E2Checks {
    // row qmax+1, column pmax+1 and the abutment in degree pmax+qmax+1 all vanish
    bool vanishing_beyond_bounds = false;
    long euler_e2 = 0;
    long euler_abutment = 0;
    // meaningful only when vanishing_beyond_bounds
    bool euler_holds = false;
    // total degrees where every E2 term is within the computed grid
    std::vector<std::size_t> bound_degrees;
    bool bound_holds = true;
    // set when E2 is concentrated in q = 0 (row) or p = 0 (column) over the computed grid
    std::optional<bool> row_collapse_holds;
    std::optional<bool> column_collapse_holds;
    // dim abutment = Σ E2 on every checked total degree
    bool degenerates = false;
};

struct E2Page {
    Ring ring = Ring::Rationals;
    bool homological = false;
    std::size_t pmax = 0;
    std::size_t qmax = 0;
    // grid[p][q] for p <= pmax+1, q <= qmax+1
    std::vector<std::vector<HomologyGroup>> grid;
    // degrees 0..pmax+qmax+1
    std::vector<HomologyGroup> abutment;
    std::vector<std::string> notes;
    E2Checks checks;

    std::size_t dim(std::size_t p, std::size_t q) const { return grid.at(p).at(q).free_rank; }
};

E2Checks check_e2(const E2Page& page);

// E2^{p,q} = H^p(B, R^q u_* F) => H^{p+q}(E, F), over Q.
E2Page leray_e2(const FinFunctor& u, const CoeffSystem& f, std::size_t pmax, std::size_t qmax);
// E2_{p,q} = H_p(B, L_q u_! F) => H_{p+q}(E, F), over Q.
E2Page colim_e2(const FinFunctor& u, const CoeffSystem& f, std::size_t pmax, std::size_t qmax);

// Builds an E2 page from a per-q coefficient generator on B and the abutment system.
E2Page assemble_e2(const std::function<CoeffSystem(std::size_t)>& coefficient_on_base, const CoeffSystem& total,
                   std::size_t pmax, std::size_t qmax);

} // namespace catcoh
