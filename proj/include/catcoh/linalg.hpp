#pragma once

// Smith normal form, ranks, kernels and related exact reductions.

#include "catcoh/matrix.hpp"

#include <vector>

namespace catcoh {

// U * A * V = D with U, V unimodular and D diagonal, d1 | d2 | ...
struct SmithForm {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;

    std::size_t rank() const;
    // nonzero diagonal entries, units included
    std::vector<Integer> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

// Nonzero invariant factors (units included), without transforms.
std::vector<Integer> invariant_factors(const IntMatrix& a);
// Same for an integral sparse matrix; unit pivots are eliminated sparsely first.
std::vector<Integer> invariant_factors(const SparseMatrix& a);

std::size_t rank(const ExactMatrix& a);
std::size_t rank(const SparseMatrix& a);

Integer determinant(const IntMatrix& a);

// Reduced row echelon form over Q; pivot columns returned through the second argument.
ExactMatrix rref(const ExactMatrix& a, std::vector<std::size_t>* pivots = nullptr);

// Columns form a basis of the kernel over Q.
ExactMatrix kernel_basis(const ExactMatrix& a);
// Columns form a basis of the kernel over Z (a saturated lattice).
IntMatrix integer_kernel_basis(const IntMatrix& a);

// Columns form a basis of the column space over Q, chosen among the columns of a.
ExactMatrix column_space_basis(const ExactMatrix& a);

ExactMatrix inverse(const ExactMatrix& a);

// Extends the independent columns of a to a basis of Q^rows using standard vectors.
ExactMatrix extend_to_basis(const ExactMatrix& a);

// Columns of a placed side by side.
ExactMatrix hconcat(const std::vector<ExactMatrix>& parts, std::size_t rows);

} // namespace catcoh
