#include "catcoh/homology.hpp"

#include <sstream>

namespace catcoh {

std::string to_string(const HomologyGroup& h, Ring ring)
{
    if (h.is_zero())
        return "0";
    std::ostringstream os;
    const char* base = ring == Ring::Integers ? "Z" : "Q";
    bool first = true;
    if (h.free_rank > 0) {
        os << base;
        if (h.free_rank > 1)
            os << "^" << h.free_rank;
        first = false;
    }
    for (const auto& d : h.torsion) {
        os << (first ? "" : " + ") << base << "/" << d;
        first = false;
    }
    return os.str();
}

FreeComplex FreeComplex::make(Ring ring, Orientation orientation, std::vector<std::size_t> dims,
                              std::vector<SparseMatrix> maps)
{
    if (dims.empty())
        fail(ErrorKind::ShapeMismatch, "a complex needs at least one degree");
    if (maps.size() + 1 != dims.size() && maps.size() != dims.size())
        fail(ErrorKind::ShapeMismatch, std::to_string(dims.size()) + " degrees but " + std::to_string(maps.size()) +
                                           " differentials");
    for (std::size_t n = 0; n < maps.size(); ++n) {
        const SparseMatrix& d = maps[n];
        std::size_t lower = dims[n];
        bool ok = orientation == Orientation::Cochain ? d.cols() == lower : d.rows() == lower;
        if (n + 1 < dims.size()) {
            std::size_t upper = dims[n + 1];
            ok = ok && (orientation == Orientation::Cochain ? d.rows() == upper : d.cols() == upper);
        }
        if (!ok)
            fail(ErrorKind::ShapeMismatch, "differential joining degrees " + std::to_string(n) + " and " +
                                               std::to_string(n + 1) + " is " + std::to_string(d.rows()) + "x" +
                                               std::to_string(d.cols()));
        if (ring == Ring::Integers)
            for (std::size_t r = 0; r < d.rows(); ++r)
                for (const auto& [c, v] : d.row(r))
                    if (!is_integral(v))
                        fail(ErrorKind::NotIntegral, "differential in degree " + std::to_string(n) +
                                                         " has entry " + format_rational(v));
    }
    for (std::size_t n = 0; n + 1 < maps.size(); ++n) {
        SparseMatrix dd = orientation == Orientation::Cochain ? maps[n + 1] * maps[n] : maps[n] * maps[n + 1];
        if (!dd.is_zero())
            fail(ErrorKind::InternalInvariant, "d∘d != 0 around degree " + std::to_string(n + 1));
    }
    FreeComplex k;
    k.ring_ = ring;
    k.orientation_ = orientation;
    k.dims_ = std::move(dims);
    k.maps_ = std::move(maps);
    return k;
}

namespace {

struct MapReduction {
    std::size_t rank = 0;
    std::vector<Integer> torsion; // factors > 1, Z only
};

MapReduction reduce_map(const SparseMatrix& d, Ring ring)
{
    MapReduction out;
    if (ring == Ring::Rationals) {
        out.rank = rank(d);
        return out;
    }
    for (auto& f : invariant_factors(d)) {
        ++out.rank;
        if (f != 1)
            out.torsion.push_back(std::move(f));
    }
    return out;
}

HomologyReport assemble(const FreeComplex& k, std::size_t n, const MapReduction* leaving, const MapReduction* arriving,
                        bool unsafe)
{
    HomologyReport rep;
    std::size_t r_out = leaving ? leaving->rank : 0;
    std::size_t r_in = arriving ? arriving->rank : 0;
    rep.group.free_rank = k.dims()[n] - r_out - r_in;
    if (arriving)
        rep.group.torsion = arriving->torsion;
    rep.upper_truncation_unsafe = unsafe;
    return rep;
}

} // namespace

std::vector<HomologyReport> complex_homology_all(const FreeComplex& k)
{
    std::vector<MapReduction> red;
    for (const auto& d : k.maps())
        red.push_back(reduce_map(d, k.ring()));
    std::vector<HomologyReport> out;
    for (std::size_t n = 0; n <= k.top_degree(); ++n) {
        const MapReduction* above = n < red.size() ? &red[n] : nullptr;
        const MapReduction* below = n > 0 ? &red[n - 1] : nullptr;
        bool unsafe = above == nullptr;
        if (k.orientation() == Orientation::Cochain)
            out.push_back(assemble(k, n, above, below, unsafe));
        else
            out.push_back(assemble(k, n, below, above, unsafe));
    }
    return out;
}

HomologyReport complex_homology(const FreeComplex& k, std::size_t n)
{
    if (n > k.top_degree())
        fail(ErrorKind::DegreeOutOfRange, "degree " + std::to_string(n) + " exceeds top degree " +
                                              std::to_string(k.top_degree()));
    std::optional<MapReduction> above, below;
    if (n < k.maps().size())
        above = reduce_map(k.maps()[n], k.ring());
    if (n > 0)
        below = reduce_map(k.maps()[n - 1], k.ring());
    const MapReduction* a = above ? &*above : nullptr;
    const MapReduction* b = below ? &*below : nullptr;
    if (k.orientation() == Orientation::Cochain)
        return assemble(k, n, a, b, !above);
    return assemble(k, n, b, a, !above);
}

HomologyBasis homology_basis(const FreeComplex& k, std::size_t n)
{
    if (n > k.top_degree())
        fail(ErrorKind::DegreeOutOfRange, "degree " + std::to_string(n) + " exceeds top degree " +
                                              std::to_string(k.top_degree()));
    const std::size_t dim = k.dims()[n];
    const bool cochain = k.orientation() == Orientation::Cochain;
    std::optional<ExactMatrix> leaving, arriving;
    if (cochain) {
        if (n < k.maps().size())
            leaving = k.maps()[n].to_dense();
        if (n > 0)
            arriving = k.maps()[n - 1].to_dense();
    } else {
        if (n > 0)
            leaving = k.maps()[n - 1].to_dense();
        if (n < k.maps().size())
            arriving = k.maps()[n].to_dense();
    }
    ExactMatrix cycles = leaving ? kernel_basis(*leaving) : ExactMatrix::identity(dim);
    ExactMatrix boundaries = arriving ? column_space_basis(*arriving) : ExactMatrix(dim, 0);
    // boundaries first, so the pivot columns after them pick class representatives
    ExactMatrix joint = hconcat({boundaries, cycles}, dim);
    std::vector<std::size_t> pivots;
    rref(joint, &pivots);
    std::vector<std::size_t> reps;
    for (std::size_t p : pivots)
        if (p >= boundaries.cols())
            reps.push_back(p);

    HomologyBasis hb;
    hb.representatives = ExactMatrix(dim, reps.size());
    for (std::size_t j = 0; j < reps.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i)
            hb.representatives(i, j) = joint(i, reps[j]);
    ExactMatrix full = extend_to_basis(hconcat({boundaries, hb.representatives}, dim));
    ExactMatrix inv = inverse(full);
    hb.coordinates = ExactMatrix(reps.size(), dim);
    for (std::size_t j = 0; j < reps.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i)
            hb.coordinates(j, i) = inv(boundaries.cols() + j, i);
    return hb;
}

ExactMatrix induced_on_homology(const HomologyBasis& from, const HomologyBasis& to, const ExactMatrix& chain_map)
{
    return to.coordinates * (chain_map * from.representatives);
}

} // namespace catcoh
