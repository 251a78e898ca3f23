#include "catcoh/limits.hpp"

namespace catcoh {

Diagram Diagram::make(CatPtr index, Ring ring, Variance variance, std::vector<std::size_t> ranks,
                      std::vector<ExactMatrix> maps)
{
    const FinCat& J = *index;
    if (ranks.size() != J.object_count() || maps.size() != J.morphism_count())
        fail(ErrorKind::ShapeMismatch, "diagram data does not match the index category");
    Diagram d;
    d.index_ = std::move(index);
    d.ring_ = ring;
    d.variance_ = variance;
    d.ranks_ = std::move(ranks);
    d.maps_ = std::move(maps);
    for (std::size_t m = 0; m < J.morphism_count(); ++m) {
        const ExactMatrix& f = d.maps_[m];
        if (f.rows() != d.ranks_[d.map_target(m)] || f.cols() != d.ranks_[d.map_source(m)])
            fail(ErrorKind::ShapeMismatch, "value of morphism " + J.morphism_name(m) + " has the wrong shape");
        if (ring == Ring::Integers && !is_integral(f))
            fail(ErrorKind::NotIntegral, "value of morphism " + J.morphism_name(m));
        if (J.is_identity(m) && !f.is_identity())
            fail(ErrorKind::NonFunctorialDiagram, "identity " + J.morphism_name(m) + " is not sent to the identity");
    }
    for (std::size_t f = 0; f < J.morphism_count(); ++f)
        for (std::size_t g : J.morphisms_from(J.dst(f))) {
            std::size_t gf = J.compose(g, f);
            ExactMatrix expect = variance == Variance::Covariant ? d.maps_[g] * d.maps_[f] : d.maps_[f] * d.maps_[g];
            if (!(expect == d.maps_[gf]))
                fail(ErrorKind::NonFunctorialDiagram,
                     "F(" + J.morphism_name(g) + "∘" + J.morphism_name(f) + ") differs from the composite of values");
        }
    return d;
}

std::size_t Diagram::map_source(std::size_t m) const
{
    return variance_ == Variance::Covariant ? index_->src(m) : index_->dst(m);
}

std::size_t Diagram::map_target(std::size_t m) const
{
    return variance_ == Variance::Covariant ? index_->dst(m) : index_->src(m);
}

namespace {

std::vector<std::size_t> offsets_of(const std::vector<std::size_t>& ranks)
{
    std::vector<std::size_t> off(ranks.size() + 1, 0);
    for (std::size_t j = 0; j < ranks.size(); ++j)
        off[j + 1] = off[j] + ranks[j];
    return off;
}

} // namespace

LimitResult finite_limit(const Diagram& d)
{
    const FinCat& J = *d.index();
    auto off = offsets_of(d.ranks());
    std::size_t total_rows = 0;
    std::vector<std::size_t> row_off;
    for (std::size_t m = 0; m < J.morphism_count(); ++m) {
        row_off.push_back(total_rows);
        total_rows += d.rank(d.map_target(m));
    }
    // x |-> F(m) x_source - x_target, one block row per morphism
    ExactMatrix diff(total_rows, off.back());
    for (std::size_t m = 0; m < J.morphism_count(); ++m) {
        const ExactMatrix& f = d.map(m);
        std::size_t s = d.map_source(m), t = d.map_target(m);
        for (std::size_t i = 0; i < f.rows(); ++i) {
            for (std::size_t j = 0; j < f.cols(); ++j)
                diff(row_off[m] + i, off[s] + j) += f(i, j);
            diff(row_off[m] + i, off[t] + i) -= 1;
        }
    }
    LimitResult out;
    out.basis = d.ring() == Ring::Integers ? to_exact(integer_kernel_basis(to_integer_matrix(diff)))
                                           : kernel_basis(diff);
    out.group.free_rank = out.basis.cols();
    for (std::size_t j = 0; j < J.object_count(); ++j) {
        ExactMatrix p(d.rank(j), out.basis.cols());
        for (std::size_t i = 0; i < d.rank(j); ++i)
            for (std::size_t c = 0; c < out.basis.cols(); ++c)
                p(i, c) = out.basis(off[j] + i, c);
        out.projections.push_back(std::move(p));
    }
    return out;
}

ColimitResult finite_colimit(const Diagram& d)
{
    const FinCat& J = *d.index();
    auto off = offsets_of(d.ranks());
    std::size_t total_cols = 0;
    std::vector<std::size_t> col_off;
    for (std::size_t m = 0; m < J.morphism_count(); ++m) {
        col_off.push_back(total_cols);
        total_cols += d.rank(d.map_source(m));
    }
    // y_m |-> F(m) y_m - y_m, the relations of the quotient
    SparseMatrix rel(off.back(), total_cols);
    for (std::size_t m = 0; m < J.morphism_count(); ++m) {
        const ExactMatrix& f = d.map(m);
        std::size_t s = d.map_source(m), t = d.map_target(m);
        rel.add_block(off[t], col_off[m], f);
        for (std::size_t j = 0; j < f.cols(); ++j)
            rel.add(off[s] + j, col_off[m] + j, -1);
    }
    ColimitResult out;
    if (d.ring() == Ring::Rationals) {
        out.group.free_rank = off.back() - rank(rel);
        return out;
    }
    auto factors = invariant_factors(rel);
    out.group.free_rank = off.back() - factors.size();
    for (auto& f : factors)
        if (f != 1)
            out.group.torsion.push_back(std::move(f));
    return out;
}

} // namespace catcoh
