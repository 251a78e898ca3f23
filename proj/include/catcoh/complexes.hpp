#pragma once

// Thomason cochain and chain complexes, the direct Baues-Wirsching complex,
// normalized variants, induced chain maps and (co)homology.

#include "catcoh/coeff.hpp"

namespace catcoh {

enum class Provenance { ThomasonCochain, ThomasonChain, BWDirect };

std::string_view to_string(Provenance p);

// Which simplices and basis vectors make up one degree of a complex.
struct DegreeDirectory {
    std::vector<Simplex> simplices;
    // offsets[k] is the first global index of simplex k's block; one extra entry at the end
    std::vector<std::size_t> offsets;

    std::size_t size() const { return offsets.back(); }
    // block of a simplex listed here, if any
    std::optional<std::size_t> find(const Simplex& s) const;
};

struct AssembledComplex {
    FreeComplex complex;
    std::vector<DegreeDirectory> directory;
    Provenance provenance = Provenance::ThomasonCochain;
    bool normalized = false;
    // built from truncated tables, whose extension to all of Δ/C is assumed
    bool assumes_extension = false;
};

struct AssemblyOptions {
    bool normalized = false;
};

// Degrees 0..N; degree N is upper-truncation-unsafe.
AssembledComplex thomason_cochain_complex(const CoeffSystem& t, std::size_t N, AssemblyOptions options = {});
AssembledComplex thomason_chain_complex(const CoeffSystem& t, std::size_t N, AssemblyOptions options = {});
// Either of the above according to the system's variance.
AssembledComplex thomason_complex(const CoeffSystem& t, std::size_t N, AssemblyOptions options = {});

// The cochain complex of a covariant natural system D on F(C), written
// directly on chains of morphisms.
AssembledComplex bw_direct_complex(const FactorizationCategory& fc, const Diagram& d, std::size_t N);

// Restriction of a Thomason complex of a pulled-back system to nondegenerate simplices.
AssembledComplex normalized_complex(const AssembledComplex& a, const CoeffSystem& t);

// Degreewise matrices of C*(φ, τ) (covariant) or C_*(φ, τ) (contravariant) for degrees 0..N.
std::vector<SparseMatrix> induced_chain_map(const CoeffMorphism& m, std::size_t N, AssemblyOptions options = {});

// d_target∘F = F∘d_source wherever both sides are defined.
bool is_chain_map(const FreeComplex& source, const FreeComplex& target, const std::vector<SparseMatrix>& f);

// H^n (covariant) or H_n (contravariant), assembled through degree n+1.
HomologyGroup cohomology(const CoeffSystem& t, std::size_t n, AssemblyOptions options = {});
HomologyGroup homology(const CoeffSystem& t, std::size_t n, AssemblyOptions options = {});
// Degrees 0..N from one assembly through N+1; variance decides between H^* and H_*.
std::vector<HomologyGroup> thomason_homology_range(const CoeffSystem& t, std::size_t N, AssemblyOptions options = {});

// The diagram of values on 0- and 1-simplices with the coface maps between
// them. Its limit (covariant) is H^0 and its colimit (contravariant) is H_0.
Diagram low_degree_diagram(const CoeffSystem& t);

} // namespace catcoh
