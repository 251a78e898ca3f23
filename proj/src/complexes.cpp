#include "catcoh/complexes.hpp"

#include <algorithm>

namespace catcoh {

std::string_view to_string(Provenance p)
{
    switch (p) {
    case Provenance::ThomasonCochain:
        return "thomason-cochain";
    case Provenance::ThomasonChain:
        return "thomason-chain";
    case Provenance::BWDirect:
        return "bw-direct";
    }
    return "?";
}

std::optional<std::size_t> DegreeDirectory::find(const Simplex& s) const
{
    auto it = std::lower_bound(simplices.begin(), simplices.end(), s);
    if (it == simplices.end() || !(*it == s))
        return std::nullopt;
    return static_cast<std::size_t>(it - simplices.begin());
}

namespace {

DegreeDirectory make_directory(const FinCat& c, std::size_t n, bool normalized,
                               const std::function<std::size_t(const Simplex&)>& rank_of)
{
    DegreeDirectory dir;
    dir.simplices = normalized ? nondegenerate_level(c, n) : nerve_level(c, n);
    dir.offsets.reserve(dir.simplices.size() + 1);
    dir.offsets.push_back(0);
    for (const auto& s : dir.simplices)
        dir.offsets.push_back(dir.offsets.back() + rank_of(s));
    return dir;
}

std::vector<DegreeDirectory> directories(const CoeffSystem& t, std::size_t N, bool normalized)
{
    std::vector<DegreeDirectory> dirs;
    for (std::size_t n = 0; n <= N; ++n)
        dirs.push_back(make_directory(*t.base(), n, normalized, [&](const Simplex& s) { return t.evaluate(s); }));
    return dirs;
}

std::vector<std::size_t> dims_of(const std::vector<DegreeDirectory>& dirs)
{
    std::vector<std::size_t> dims;
    for (const auto& d : dirs)
        dims.push_back(d.size());
    return dims;
}

void check_assembly(const CoeffSystem& t, std::size_t N, AssemblyOptions options)
{
    if (auto m = t.max_dim(); m && N > *m)
        fail(ErrorKind::BeyondTruncation, "assembly through degree " + std::to_string(N) +
                                              " needs tables through dimension " + std::to_string(N) + ", have " +
                                              std::to_string(*m));
    if (options.normalized && !t.is_pulled_back())
        fail(ErrorKind::UnsupportedProvenance, "normalization needs the degeneracy action of a pulled-back system");
}

int sign_of(std::size_t i)
{
    return i % 2 == 0 ? 1 : -1;
}

} // namespace

AssembledComplex thomason_cochain_complex(const CoeffSystem& t, std::size_t N, AssemblyOptions options)
{
    if (t.variance() != Variance::Covariant)
        fail(ErrorKind::VarianceMismatch, "the cochain complex needs a covariant system");
    check_assembly(t, N, options);
    const FinCat& C = *t.base();
    auto dirs = directories(t, N, options.normalized);
    std::vector<SparseMatrix> maps;
    for (std::size_t n = 0; n < N; ++n) {
        const auto& rows = dirs[n + 1];
        const auto& cols = dirs[n];
        SparseMatrix d(rows.size(), cols.size());
        for (std::size_t k = 0; k < rows.simplices.size(); ++k) {
            const Simplex& g = rows.simplices[k];
            if (rows.offsets[k + 1] == rows.offsets[k])
                continue;
            for (std::size_t i = 0; i <= n + 1; ++i) {
                auto col = cols.find(apply_simplex_map(C, OrderMap::coface(n + 1, i), g));
                if (!col || cols.offsets[*col + 1] == cols.offsets[*col])
                    continue;
                d.add_block(rows.offsets[k], cols.offsets[*col], t.coface_map(g, i), sign_of(i));
            }
        }
        maps.push_back(std::move(d));
    }
    AssembledComplex a{FreeComplex::make(t.ring(), Orientation::Cochain, dims_of(dirs), std::move(maps)),
                       std::move(dirs), Provenance::ThomasonCochain, options.normalized, !t.is_pulled_back()};
    return a;
}

AssembledComplex thomason_chain_complex(const CoeffSystem& t, std::size_t N, AssemblyOptions options)
{
    if (t.variance() != Variance::Contravariant)
        fail(ErrorKind::VarianceMismatch, "the chain complex needs a contravariant system");
    check_assembly(t, N, options);
    const FinCat& C = *t.base();
    auto dirs = directories(t, N, options.normalized);
    std::vector<SparseMatrix> maps;
    for (std::size_t n = 0; n < N; ++n) {
        const auto& rows = dirs[n];
        const auto& cols = dirs[n + 1];
        SparseMatrix d(rows.size(), cols.size());
        for (std::size_t k = 0; k < cols.simplices.size(); ++k) {
            const Simplex& f = cols.simplices[k];
            if (cols.offsets[k + 1] == cols.offsets[k])
                continue;
            for (std::size_t i = 0; i <= n + 1; ++i) {
                auto row = rows.find(apply_simplex_map(C, OrderMap::coface(n + 1, i), f));
                if (!row || rows.offsets[*row + 1] == rows.offsets[*row])
                    continue;
                d.add_block(rows.offsets[*row], cols.offsets[k], t.coface_map(f, i), sign_of(i));
            }
        }
        maps.push_back(std::move(d));
    }
    AssembledComplex a{FreeComplex::make(t.ring(), Orientation::Chain, dims_of(dirs), std::move(maps)),
                       std::move(dirs), Provenance::ThomasonChain, options.normalized, !t.is_pulled_back()};
    return a;
}

AssembledComplex thomason_complex(const CoeffSystem& t, std::size_t N, AssemblyOptions options)
{
    return t.variance() == Variance::Covariant ? thomason_cochain_complex(t, N, options)
                                               : thomason_chain_complex(t, N, options);
}

AssembledComplex bw_direct_complex(const FactorizationCategory& fc, const Diagram& d, std::size_t N)
{
    if (!(fc.category == d.index() || *fc.category == *d.index()))
        fail(ErrorKind::ShapeMismatch, "BW data must live on the factorization category");
    if (d.variance() != Variance::Covariant)
        fail(ErrorKind::VarianceMismatch, "the BW cochain complex needs covariant data");
    const FinCat& C = *fc.base;

    auto composite = [&](const std::vector<std::size_t>& chain, std::size_t vertex) {
        if (chain.empty())
            return C.identity(vertex);
        std::size_t acc = chain.back();
        for (std::size_t k = chain.size() - 1; k-- > 0;)
            acc = C.compose(chain[k], acc);
        return acc;
    };
    auto value = [&](const std::vector<std::size_t>& chain, std::size_t vertex) {
        return d.rank(composite(chain, vertex));
    };
    auto transport = [&](std::size_t from, std::size_t alpha, std::size_t beta) {
        auto m = fc.find(from, alpha, beta);
        if (!m)
            fail(ErrorKind::NonFunctorialData, "missing factorization pair");
        return d.map(*m);
    };

    std::vector<DegreeDirectory> dirs;
    for (std::size_t n = 0; n <= N; ++n)
        dirs.push_back(make_directory(C, n, false, [&](const Simplex& s) { return value(s.chain, s.vertex); }));

    std::vector<SparseMatrix> maps;
    for (std::size_t n = 0; n < N; ++n) {
        const auto& rows = dirs[n + 1];
        const auto& cols = dirs[n];
        SparseMatrix dm(rows.size(), cols.size());
        auto column_of = [&](const std::vector<std::size_t>& chain, std::size_t vertex) {
            Simplex s{chain, vertex};
            auto k = cols.find(s);
            ensure(k.has_value(), "face chain missing from the nerve");
            return cols.offsets[*k];
        };
        for (std::size_t k = 0; k < rows.simplices.size(); ++k) {
            const auto& lam = rows.simplices[k].chain; // λ_1..λ_{n+1}
            const std::size_t row0 = rows.offsets[k];
            // D(id, λ_1)·c(λ_2, ..., λ_{n+1})
            {
                std::vector<std::size_t> tail(lam.begin() + 1, lam.end());
                std::size_t tail_vertex = C.src(lam[0]);
                std::size_t h = composite(tail, tail_vertex);
                dm.add_block(row0, column_of(tail, tail_vertex), transport(h, C.identity(C.src(h)), lam[0]), 1);
            }
            // Σ (-1)^i c(λ_1, ..., λ_iλ_{i+1}, ..., λ_{n+1})
            for (std::size_t i = 1; i <= n; ++i) {
                std::vector<std::size_t> merged;
                for (std::size_t j = 0; j < lam.size(); ++j) {
                    if (j + 1 == i) {
                        merged.push_back(C.compose(lam[j], lam[j + 1]));
                        ++j;
                    } else {
                        merged.push_back(lam[j]);
                    }
                }
                std::size_t r = d.rank(composite(lam, C.dst(lam[0])));
                dm.add_block(row0, column_of(merged, C.dst(lam[0])), ExactMatrix::identity(r), sign_of(i));
            }
            // (-1)^{n+1} D(λ_{n+1}, id)·c(λ_1, ..., λ_n)
            {
                std::vector<std::size_t> head(lam.begin(), lam.end() - 1);
                std::size_t head_vertex = C.dst(lam[0]);
                std::size_t h = composite(head, head_vertex);
                dm.add_block(row0, column_of(head, head_vertex), transport(h, lam.back(), C.identity(C.dst(h))),
                             sign_of(n + 1));
            }
        }
        maps.push_back(std::move(dm));
    }
    return AssembledComplex{FreeComplex::make(d.ring(), Orientation::Cochain, dims_of(dirs), std::move(maps)),
                            std::move(dirs), Provenance::BWDirect, false, false};
}

AssembledComplex normalized_complex(const AssembledComplex& a, const CoeffSystem& t)
{
    if (a.provenance == Provenance::BWDirect || !t.is_pulled_back())
        fail(ErrorKind::UnsupportedProvenance, "only Thomason complexes of pulled-back systems can be normalized");
    return thomason_complex(t, a.complex.top_degree(), AssemblyOptions{true});
}

std::vector<SparseMatrix> induced_chain_map(const CoeffMorphism& m, std::size_t N, AssemblyOptions options)
{
    const CoeffSystem& t1 = m.source();
    const CoeffSystem& t2 = m.target();
    check_assembly(t1, N, options);
    check_assembly(t2, N, options);
    auto d1 = directories(t1, N, options.normalized);
    auto d2 = directories(t2, N, options.normalized);
    const bool cov = m.variance() == Variance::Covariant;
    std::vector<SparseMatrix> out;
    for (std::size_t n = 0; n <= N; ++n) {
        SparseMatrix f(d2[n].size(), d1[n].size());
        // covariant: blocks (g, φg) over simplices g of C2; contravariant: (φf, f) over f of C1
        const auto& walk = cov ? d2[n] : d1[n];
        const auto& other = cov ? d1[n] : d2[n];
        for (std::size_t k = 0; k < walk.simplices.size(); ++k) {
            const Simplex& s = walk.simplices[k];
            auto j = other.find(delta_u(m.phi(), s));
            if (!j)
                continue;
            ExactMatrix tau = m.component(s);
            if (cov)
                f.add_block(walk.offsets[k], other.offsets[*j], tau);
            else
                f.add_block(other.offsets[*j], walk.offsets[k], tau);
        }
        out.push_back(std::move(f));
    }
    return out;
}

bool is_chain_map(const FreeComplex& source, const FreeComplex& target, const std::vector<SparseMatrix>& f)
{
    const bool cochain = source.orientation() == Orientation::Cochain;
    for (std::size_t n = 0; n + 1 < f.size(); ++n) {
        if (n >= source.maps().size() || n >= target.maps().size())
            break;
        SparseMatrix lhs, rhs;
        if (cochain) {
            lhs = f[n + 1] * source.maps()[n];
            rhs = target.maps()[n] * f[n];
        } else {
            lhs = f[n] * source.maps()[n];
            rhs = target.maps()[n] * f[n + 1];
        }
        if (!(lhs == rhs))
            return false;
    }
    return true;
}

std::vector<HomologyGroup> thomason_homology_range(const CoeffSystem& t, std::size_t N, AssemblyOptions options)
{
    auto a = thomason_complex(t, N + 1, options);
    auto all = complex_homology_all(a.complex);
    std::vector<HomologyGroup> out;
    for (std::size_t n = 0; n <= N; ++n)
        out.push_back(std::move(all[n].group));
    return out;
}

HomologyGroup cohomology(const CoeffSystem& t, std::size_t n, AssemblyOptions options)
{
    if (t.variance() != Variance::Covariant)
        fail(ErrorKind::VarianceMismatch, "cohomology needs a covariant system");
    auto a = thomason_cochain_complex(t, n + 1, options);
    return complex_homology(a.complex, n).group;
}

HomologyGroup homology(const CoeffSystem& t, std::size_t n, AssemblyOptions options)
{
    if (t.variance() != Variance::Contravariant)
        fail(ErrorKind::VarianceMismatch, "homology needs a contravariant system");
    auto a = thomason_chain_complex(t, n + 1, options);
    return complex_homology(a.complex, n).group;
}

Diagram low_degree_diagram(const CoeffSystem& t)
{
    const FinCat& C = *t.base();
    const auto& vertices = nerve_level(C, 0);
    const auto& edges = nerve_level(C, 1);
    const std::size_t nv = vertices.size();
    RawCategory r;
    for (const auto& v : vertices)
        r.objects.push_back(C.object_name(v.vertex));
    for (const auto& e : edges)
        r.objects.push_back("[" + simplex_key(C, e) + "]");
    for (std::size_t x = 0; x < r.objects.size(); ++x) {
        r.identities.push_back(r.morphisms.size());
        r.morphisms.push_back({"id_" + r.objects[x], x, x});
    }
    std::vector<ExactMatrix> maps;
    for (std::size_t x = 0; x < r.objects.size(); ++x) {
        std::size_t rank = x < nv ? t.evaluate(vertices[x]) : t.evaluate(edges[x - nv]);
        maps.push_back(ExactMatrix::identity(rank));
    }
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const Simplex& g = edges[k];
        for (std::size_t i = 0; i <= 1; ++i) {
            Simplex face = apply_simplex_map(C, OrderMap::coface(1, i), g);
            r.morphisms.push_back({"d" + std::to_string(i) + "[" + simplex_key(C, g) + "]", face.vertex, nv + k});
            maps.push_back(t.coface_map(g, i));
        }
    }
    fill_identity_compositions(r);
    std::vector<std::size_t> ranks;
    for (const auto& v : vertices)
        ranks.push_back(t.evaluate(v));
    for (const auto& e : edges)
        ranks.push_back(t.evaluate(e));
    return Diagram::make(share(FinCat::validate(std::move(r))), t.ring(), t.variance(), std::move(ranks),
                         std::move(maps));
}

} // namespace catcoh
