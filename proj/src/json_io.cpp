#include "catcoh/json_io.hpp"

#include <fstream>

namespace catcoh {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void bad(const std::string& what)
{
    fail(ErrorKind::InvalidInput, what);
}

const Json& field(const Json& j, const char* key, const std::string& where)
{
    if (!j.is_object() || !j.contains(key))
        bad(where + ": missing \"" + key + "\"");
    return j.at(key);
}

std::string as_string(const Json& j, const std::string& where)
{
    if (!j.is_string())
        bad(where + ": expected a string");
    return j.get<std::string>();
}

std::size_t as_count(const Json& j, const std::string& where)
{
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        bad(where + ": expected a non-negative integer");
    return j.get<std::size_t>();
}

Json resolve(const Json& j, const fs::path& dir)
{
    if (j.is_string())
        return read_json_file(dir / j.get<std::string>());
    return j;
}

fs::path resolve_dir(const Json& j, const fs::path& dir)
{
    if (j.is_string())
        return (dir / j.get<std::string>()).parent_path();
    return dir;
}

std::size_t object_named(const FinCat& c, const std::string& name, const std::string& where)
{
    auto o = c.find_object(name);
    if (!o)
        bad(where + ": unknown object \"" + name + "\"");
    return *o;
}

std::size_t morphism_named(const FinCat& c, const std::string& name, const std::string& where)
{
    auto m = c.find_morphism(name);
    if (!m)
        bad(where + ": unknown morphism \"" + name + "\"");
    return *m;
}

Rational scalar_from_json(const Json& j, const std::string& where)
{
    if (j.is_number_integer())
        return Rational(j.get<long long>());
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    bad(where + ": matrix entries are integers or \"p/q\" strings");
}

Json scalar_to_json(const Rational& q)
{
    if (is_integral(q)) {
        Integer n = boost::multiprecision::numerator(q);
        if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max())
            return static_cast<long long>(n);
    }
    return format_rational(q);
}

} // namespace

Json read_json_file(const fs::path& path)
{
    std::ifstream in(path);
    if (!in)
        bad("cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        bad(path.string() + ": " + e.what());
    }
}

FinCat category_from_json(const Json& input, const fs::path& dir)
{
    const Json j = resolve(input, dir);
    const fs::path sub = resolve_dir(input, dir);
    if (!j.is_object())
        bad("category: expected an object");
    if (j.contains("poset")) {
        const Json& p = j.at("poset");
        std::vector<std::string> objects;
        for (const auto& o : field(p, "objects", "poset"))
            objects.push_back(as_string(o, "poset objects"));
        std::vector<std::pair<std::string, std::string>> rel;
        if (p.contains("relations"))
            for (const auto& r : p.at("relations")) {
                if (!r.is_array() || r.size() != 2)
                    bad("poset relations are pairs");
                rel.emplace_back(as_string(r[0], "relation"), as_string(r[1], "relation"));
            }
        return poset_category(objects, rel);
    }
    if (j.contains("cyclic_group"))
        return cyclic_group_category(as_count(j.at("cyclic_group"), "cyclic_group"));
    if (j.contains("interval"))
        return interval_category(as_count(j.at("interval"), "interval"));
    if (j.contains("product")) {
        const Json& p = j.at("product");
        if (!p.is_array() || p.size() != 2)
            bad("product takes two categories");
        return product_category(category_from_json(p[0], sub), category_from_json(p[1], sub));
    }
    if (j.contains("opposite"))
        return opposite_category(category_from_json(j.at("opposite"), sub));

    RawCategory r;
    std::map<std::string, std::size_t> obj, mor;
    for (const auto& o : field(j, "objects", "category")) {
        std::string name = as_string(o, "objects");
        if (!obj.emplace(name, r.objects.size()).second)
            bad("duplicate object \"" + name + "\"");
        r.objects.push_back(name);
    }
    if (j.contains("morphisms"))
        for (const auto& m : j.at("morphisms")) {
            std::string name = as_string(field(m, "name", "morphism"), "morphism name");
            std::string where = "morphism \"" + name + "\"";
            std::string s = as_string(field(m, "src", where), where);
            std::string d = as_string(field(m, "dst", where), where);
            if (!obj.count(s) || !obj.count(d))
                bad(where + ": unknown endpoint");
            if (!mor.emplace(name, r.morphisms.size()).second)
                bad("duplicate morphism \"" + name + "\"");
            r.morphisms.push_back({name, obj[s], obj[d]});
        }
    const Json no_identities = Json::object();
    const Json& named_identities = j.contains("identities") ? j.at("identities") : no_identities;
    for (std::size_t o = 0; o < r.objects.size(); ++o) {
        std::string name = named_identities.contains(r.objects[o])
                               ? as_string(named_identities.at(r.objects[o]), "identities")
                               : "id_" + r.objects[o];
        auto it = mor.find(name);
        if (it == mor.end()) {
            it = mor.emplace(name, r.morphisms.size()).first;
            r.morphisms.push_back({name, o, o});
        } else if (r.morphisms[it->second].src != o || r.morphisms[it->second].dst != o) {
            bad("\"" + name + "\" is reserved for the identity of " + r.objects[o]);
        }
        r.identities.push_back(it->second);
    }
    if (j.contains("compose"))
        for (const auto& t : j.at("compose")) {
            if (!t.is_array() || t.size() != 3)
                bad("compose entries are [g, f, g∘f]");
            std::array<std::size_t, 3> triple{};
            for (std::size_t k = 0; k < 3; ++k) {
                std::string name = as_string(t[k], "compose");
                auto it = mor.find(name);
                if (it == mor.end())
                    bad("compose: unknown morphism \"" + name + "\"");
                triple[k] = it->second;
            }
            r.compose.push_back(triple);
        }
    fill_identity_compositions(r);
    return FinCat::validate(std::move(r));
}

Json category_to_json(const FinCat& c)
{
    Json j;
    j["objects"] = Json::array();
    for (std::size_t o = 0; o < c.object_count(); ++o)
        j["objects"].push_back(c.object_name(o));
    j["morphisms"] = Json::array();
    for (std::size_t m = 0; m < c.morphism_count(); ++m)
        j["morphisms"].push_back(
            {{"name", c.morphism_name(m)}, {"src", c.object_name(c.src(m))}, {"dst", c.object_name(c.dst(m))}});
    for (std::size_t o = 0; o < c.object_count(); ++o)
        if (c.morphism_name(c.identity(o)) != "id_" + c.object_name(o))
            j["identities"][c.object_name(o)] = c.morphism_name(c.identity(o));
    j["compose"] = Json::array();
    for (std::size_t f = 0; f < c.morphism_count(); ++f)
        for (std::size_t g : c.morphisms_from(c.dst(f))) {
            if (c.is_identity(f) || c.is_identity(g))
                continue;
            j["compose"].push_back({c.morphism_name(g), c.morphism_name(f), c.morphism_name(c.compose(g, f))});
        }
    return j;
}

FinFunctor functor_from_json(const Json& j, CatPtr source, CatPtr target)
{
    const FinCat& S = *source;
    const FinCat& T = *target;
    std::vector<std::size_t> obj(S.object_count());
    const Json& objects = field(j, "objects", "functor");
    for (std::size_t o = 0; o < S.object_count(); ++o) {
        if (!objects.contains(S.object_name(o)))
            bad("functor: no image for object \"" + S.object_name(o) + "\"");
        obj[o] = object_named(T, as_string(objects.at(S.object_name(o)), "functor objects"), "functor target");
    }
    std::vector<std::size_t> mor(S.morphism_count());
    const Json empty = Json::object();
    const Json& morphisms = j.contains("morphisms") ? j.at("morphisms") : empty;
    for (std::size_t m = 0; m < S.morphism_count(); ++m) {
        const std::string& name = S.morphism_name(m);
        if (morphisms.contains(name)) {
            mor[m] = morphism_named(T, as_string(morphisms.at(name), "functor morphisms"), "functor target");
        } else if (S.is_identity(m)) {
            mor[m] = T.identity(obj[S.src(m)]);
        } else {
            const auto& hom = T.hom(obj[S.src(m)], obj[S.dst(m)]);
            if (hom.size() != 1)
                bad("functor: the image of \"" + name + "\" is not determined by the objects");
            mor[m] = hom.front();
        }
    }
    return FinFunctor::make(std::move(source), std::move(target), std::move(obj), std::move(mor));
}

FunctorFile functor_file_from_json(const Json& j, const fs::path& dir)
{
    FunctorFile f;
    f.source = share(category_from_json(field(j, "source", "functor"), dir));
    f.target = share(category_from_json(field(j, "target", "functor"), dir));
    f.functor = functor_from_json(j, f.source, f.target);
    return f;
}

ExactMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& where)
{
    if (!j.is_array())
        bad(where + ": a matrix is an array of rows");
    if (rows == 0 || cols == 0) {
        if (!(j.empty() || (j.size() == rows && std::all_of(j.begin(), j.end(), [](const Json& r) {
                                return r.is_array() && r.empty();
                            }))))
            bad(where + ": expected an empty matrix");
        return ExactMatrix(rows, cols);
    }
    if (j.size() != rows)
        bad(where + ": expected " + std::to_string(rows) + " rows");
    ExactMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols)
            bad(where + ": expected " + std::to_string(cols) + " columns");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = scalar_from_json(j[r][c], where);
    }
    return m;
}

Json matrix_to_json(const ExactMatrix& m)
{
    Json j = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(scalar_to_json(m(r, c)));
        j.push_back(std::move(row));
    }
    return j;
}

std::vector<ExactMatrix> complete_maps(const FinCat& index, Variance variance, const std::vector<std::size_t>& ranks,
                                       std::vector<std::optional<ExactMatrix>> given)
{
    for (std::size_t o = 0; o < index.object_count(); ++o)
        if (!given[index.identity(o)])
            given[index.identity(o)] = ExactMatrix::identity(ranks[o]);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t f = 0; f < index.morphism_count(); ++f) {
            if (!given[f])
                continue;
            for (std::size_t g : index.morphisms_from(index.dst(f))) {
                std::size_t gf = index.compose(g, f);
                if (given[gf] || !given[g])
                    continue;
                given[gf] = variance == Variance::Covariant ? *given[g] * *given[f] : *given[f] * *given[g];
                changed = true;
            }
        }
    }
    std::vector<ExactMatrix> out;
    for (std::size_t m = 0; m < index.morphism_count(); ++m) {
        if (!given[m])
            bad("no map for \"" + index.morphism_name(m) + "\" and it is not a composite of given maps");
        out.push_back(std::move(*given[m]));
    }
    return out;
}

namespace {

Diagram diagram_from_json(const Json& j, CatPtr index, Ring ring, Variance variance)
{
    const FinCat& I = *index;
    std::vector<std::size_t> ranks(I.object_count());
    const Json empty = Json::object();
    const Json& rk = j.contains("ranks") ? j.at("ranks") : empty;
    for (const auto& [name, value] : rk.items())
        object_named(I, name, "ranks");
    for (std::size_t o = 0; o < I.object_count(); ++o) {
        if (rk.contains(I.object_name(o)))
            ranks[o] = as_count(rk.at(I.object_name(o)), "ranks");
        else if (j.contains("rank"))
            ranks[o] = as_count(j.at("rank"), "rank");
        else
            bad("no rank for \"" + I.object_name(o) + "\"");
    }
    std::vector<std::optional<ExactMatrix>> given(I.morphism_count());
    if (j.contains("maps"))
        for (const auto& [name, value] : j.at("maps").items()) {
            std::size_t m = morphism_named(I, name, "maps");
            std::size_t from = variance == Variance::Covariant ? I.src(m) : I.dst(m);
            std::size_t to = variance == Variance::Covariant ? I.dst(m) : I.src(m);
            given[m] = matrix_from_json(value, ranks[to], ranks[from], "map \"" + name + "\"");
        }
    auto maps = complete_maps(I, variance, ranks, std::move(given));
    return coefficient_data(std::move(index), ring, variance, std::move(ranks), std::move(maps));
}

TruncatedTables tables_from_json(const Json& j, const FinCat& c, Variance variance)
{
    TruncatedTables t;
    std::size_t n = 0;
    while (j.contains("dim_" + std::to_string(n)))
        ++n;
    if (n == 0)
        fail(ErrorKind::IncompleteTables, "no dim_0 table");
    t.max_dim = n - 1;
    for (std::size_t d = 0; d < n; ++d) {
        const Json& table = j.at("dim_" + std::to_string(d));
        const auto& level = nerve_level(c, d);
        t.ranks.emplace_back();
        for (const auto& s : level) {
            std::string key = simplex_key(c, s);
            if (!table.contains(key))
                fail(ErrorKind::IncompleteTables, "no entry for simplex " + key);
            t.ranks.back().push_back(as_count(field(table.at(key), "rank", key), key));
        }
    }
    t.cofaces.emplace_back();
    for (std::size_t d = 1; d < n; ++d) {
        const Json& table = j.at("dim_" + std::to_string(d));
        const auto& level = nerve_level(c, d);
        t.cofaces.emplace_back();
        for (std::size_t k = 0; k < level.size(); ++k) {
            std::string key = simplex_key(c, level[k]);
            std::vector<ExactMatrix> faces;
            for (std::size_t i = 0; i <= d; ++i) {
                std::string name = "coface_" + std::to_string(i);
                const Json& entry = table.at(key);
                if (!entry.contains(name))
                    fail(ErrorKind::IncompleteTables, "no " + name + " for simplex " + key);
                Simplex face = apply_simplex_map(c, OrderMap::coface(d, i), level[k]);
                std::size_t rf = t.ranks[d - 1][simplex_index(c, face)];
                std::size_t rg = t.ranks[d][k];
                faces.push_back(variance == Variance::Covariant
                                    ? matrix_from_json(entry.at(name), rg, rf, key + " " + name)
                                    : matrix_from_json(entry.at(name), rf, rg, key + " " + name));
            }
            t.cofaces.back().push_back(std::move(faces));
        }
    }
    return t;
}

} // namespace

CoeffSystem coeff_from_json(const Json& input, CatPtr base, Ring ring, Variance fallback, const fs::path& dir)
{
    const Json j = resolve(input, dir);
    const fs::path sub = resolve_dir(input, dir);
    CoeffKind kind = parse_coeff_kind(as_string(field(j, "kind", "coefficients"), "kind"));
    Variance variance = fallback;
    if (j.contains("variance")) {
        std::string v = as_string(j.at("variance"), "variance");
        if (v == "covariant")
            variance = Variance::Covariant;
        else if (v == "contravariant")
            variance = Variance::Contravariant;
        else
            bad("variance is covariant or contravariant");
    }
    switch (kind) {
    case CoeffKind::Trivial:
        return CoeffSystem::trivial(base, ring, variance, j.contains("rank") ? as_count(j.at("rank"), "rank") : 1);
    case CoeffKind::Module:
        return CoeffSystem::pullback(kind, base, diagram_from_json(j, base, ring, variance));
    case CoeffKind::BW: {
        auto fc = factorization_category(base);
        return CoeffSystem::pullback(kind, base, diagram_from_json(j, fc.category, ring, variance));
    }
    case CoeffKind::Bimodule:
        return CoeffSystem::pullback(kind, base, diagram_from_json(j, bimodule_index(*base), ring, variance));
    case CoeffKind::Local: {
        auto g = share(category_from_json(field(j, "groupoid", "local coefficients"), sub));
        FinFunctor q = functor_from_json(field(j, "localization", "local coefficients"), base, g);
        return CoeffSystem::pullback(kind, base, diagram_from_json(j, g, ring, variance), q);
    }
    case CoeffKind::Truncated:
        return CoeffSystem::truncated(base, ring, variance, tables_from_json(j, *base, variance));
    }
    ensure(false, "unhandled coefficient kind");
    return CoeffSystem::trivial(base, ring, variance);
}

StrictFunctor strict_functor_from_json(const Json& input, CatPtr base, const fs::path& dir)
{
    const Json j = resolve(input, dir);
    const fs::path sub = resolve_dir(input, dir);
    const FinCat& B = *base;
    StrictFunctor g{base, {}, {}};
    const Json& fibers = field(j, "fibers", "pseudofunctor");
    for (std::size_t b = 0; b < B.object_count(); ++b) {
        if (!fibers.contains(B.object_name(b)))
            bad("pseudofunctor: no fiber over \"" + B.object_name(b) + "\"");
        g.fibers.push_back(share(category_from_json(fibers.at(B.object_name(b)), sub)));
    }
    const Json empty = Json::object();
    const Json& transports = j.contains("transports") ? j.at("transports") : empty;
    for (const auto& [name, value] : transports.items())
        morphism_named(B, name, "transports");
    for (std::size_t phi = 0; phi < B.morphism_count(); ++phi) {
        const std::string& name = B.morphism_name(phi);
        const CatPtr& from = g.fibers[B.dst(phi)];
        const CatPtr& to = g.fibers[B.src(phi)];
        if (transports.contains(name))
            g.transports.push_back(functor_from_json(transports.at(name), from, to));
        else if (B.is_identity(phi))
            g.transports.push_back(FinFunctor::identity(from));
        else
            bad("pseudofunctor: no transport along \"" + name + "\"");
    }
    return g;
}

Json homology_to_json(const HomologyGroup& h)
{
    Json t = Json::array();
    for (const auto& d : h.torsion)
        t.push_back(scalar_to_json(Rational(d)));
    return {{"free_rank", h.free_rank}, {"torsion", t}};
}

HomologyGroup homology_from_json(const Json& j)
{
    HomologyGroup h;
    h.free_rank = as_count(field(j, "free_rank", "homology"), "free_rank");
    for (const auto& d : field(j, "torsion", "homology")) {
        Rational q = scalar_from_json(d, "torsion");
        if (!is_integral(q) || q <= 1)
            bad("torsion coefficients are integers greater than 1");
        h.torsion.push_back(boost::multiprecision::numerator(q));
    }
    return h;
}

Json e2_to_json(const E2Page& page)
{
    Json j;
    j["ring"] = std::string(to_string(page.ring));
    j["homological"] = page.homological;
    j["pmax"] = page.pmax;
    j["qmax"] = page.qmax;
    Json grid = Json::array();
    for (std::size_t p = 0; p <= page.pmax; ++p) {
        Json col = Json::array();
        for (std::size_t q = 0; q <= page.qmax; ++q)
            col.push_back(page.dim(p, q));
        grid.push_back(std::move(col));
    }
    j["grid"] = std::move(grid);
    Json ab = Json::array();
    for (std::size_t n = 0; n <= page.pmax + page.qmax; ++n)
        ab.push_back(page.abutment.at(n).free_rank);
    j["abutment"] = std::move(ab);
    const auto& c = page.checks;
    Json checks;
    checks["vanishing_beyond_bounds"] = c.vanishing_beyond_bounds;
    checks["euler_e2"] = c.euler_e2;
    checks["euler_abutment"] = c.euler_abutment;
    checks["euler_holds"] = c.euler_holds;
    checks["bound_degrees"] = c.bound_degrees;
    checks["bound_holds"] = c.bound_holds;
    checks["row_collapse_holds"] = c.row_collapse_holds ? Json(*c.row_collapse_holds) : Json();
    checks["column_collapse_holds"] = c.column_collapse_holds ? Json(*c.column_collapse_holds) : Json();
    checks["degenerates"] = c.degenerates;
    j["checks"] = std::move(checks);
    j["notes"] = page.notes;
    return j;
}

Json locality_to_json(const LocalityReport& r, const FinCat& base)
{
    return {{"base_object", base.object_name(r.base_object)},
            {"degree", r.degree},
            {"comma", homology_to_json(r.comma_group)},
            {"fiber", homology_to_json(r.fiber_group)},
            {"map_rank", r.map_rank},
            {"injective", r.injective},
            {"surjective", r.surjective},
            {"isomorphism", r.isomorphism}};
}

Json certificate_to_json(const FibrationCertificate& c, const FinFunctor& u)
{
    const FinCat& E = *u.source();
    const FinCat& B = *u.target();
    Json j;
    j["is_fibration"] = c.is_fibration;
    Json lifts = Json::array();
    for (const auto& l : c.lifts)
        lifts.push_back({{"object", E.object_name(l[0])},
                         {"morphism", B.morphism_name(l[1])},
                         {"lift", E.morphism_name(l[2])}});
    j["cartesian_lifts"] = std::move(lifts);
    if (c.witness)
        j["witness"] = {{"object", E.object_name(c.witness->first)}, {"morphism", B.morphism_name(c.witness->second)}};
    else
        j["witness"] = nullptr;
    return j;
}

} // namespace catcoh
