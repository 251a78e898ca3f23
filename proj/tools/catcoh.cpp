#include "catcoh/json_io.hpp"

#include "../tests/acceptance/acceptance.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>

using namespace catcoh;
namespace fs = std::filesystem;

namespace {

struct Options {
    std::string category, coeff, functor, base, pseudofunctor;
    std::string ring = "Z";
    std::string format = "json";
    std::string fibration_mode = "e2";
    std::string coeff_on = "base";
    std::size_t degree = 0, dim = 0, max_dim = 3, pmax = 2, qmax = 2;
    std::uint64_t seed = 20240601;
    bool normalized = false, homology_variant = false, nondegenerate = false, list = false, colimit = false,
         all_degrees = false;
};

unsigned thread_count()
{
    if (const char* env = std::getenv("CATCOH_THREADS")) {
        long n = std::strtol(env, nullptr, 10);
        if (n >= 1)
            return static_cast<unsigned>(n);
    }
    return 1;
}

void emit(const Json& j)
{
    std::cout << j.dump(2) << "\n";
}

CatPtr load_category(const std::string& path)
{
    return share(category_from_json(read_json_file(path), fs::path(path).parent_path()));
}

CoeffSystem load_coeff(const std::string& path, CatPtr base, Ring ring, Variance fallback)
{
    return coeff_from_json(read_json_file(path), std::move(base), ring, fallback, fs::path(path).parent_path());
}

Variance fallback_variance(const Options& o)
{
    return o.homology_variant ? Variance::Contravariant : Variance::Covariant;
}

int run_validate(const Options& o)
{
    auto c = load_category(o.category);
    emit({{"valid", true},
          {"objects", c->object_count()},
          {"morphisms", c->morphism_count()},
          {"thin", c->is_thin()},
          {"groupoid", c->is_groupoid()}});
    return 0;
}

int run_nerve(const Options& o)
{
    auto c = load_category(o.category);
    const auto& level = o.nondegenerate ? nondegenerate_level(*c, o.dim) : nerve_level(*c, o.dim);
    Json j{{"dim", o.dim}, {"nondegenerate", o.nondegenerate}, {"count", level.size()}};
    if (o.list) {
        Json names = Json::array();
        for (const auto& s : level)
            names.push_back(simplex_key(*c, s));
        j["simplices"] = std::move(names);
    }
    if (o.format == "table")
        std::cout << (o.nondegenerate ? "nondegenerate " : "") << o.dim << "-simplices: " << level.size() << "\n";
    else
        emit(j);
    return 0;
}

int run_cohomology(const Options& o)
{
    Ring ring = parse_ring(o.ring);
    auto c = load_category(o.category);
    auto t = load_coeff(o.coeff, c, ring, fallback_variance(o));
    if (o.homology_variant != (t.variance() == Variance::Contravariant))
        fail(ErrorKind::VarianceMismatch, o.homology_variant ? "homology needs contravariant coefficients"
                                                             : "cohomology needs covariant coefficients");
    AssemblyOptions opts{o.normalized};
    auto groups = thomason_homology_range(t, o.degree, opts);
    const bool assumed = !t.is_pulled_back();
    const char* symbol = o.homology_variant ? "H_" : "H^";
    if (o.format == "table") {
        for (std::size_t n = o.all_degrees ? 0 : o.degree; n <= o.degree; ++n)
            std::cout << symbol << n << " = " << to_string(groups[n], ring) << "\n";
        return 0;
    }
    auto one = [&](std::size_t n) {
        Json j{{"degree", n}};
        Json h = homology_to_json(groups[n]);
        j["free_rank"] = h["free_rank"];
        j["torsion"] = h["torsion"];
        return j;
    };
    Json out;
    if (o.all_degrees) {
        out = Json::array();
        for (std::size_t n = 0; n <= o.degree; ++n)
            out.push_back(one(n));
    } else {
        out = one(o.degree);
    }
    if (assumed) {
        Json wrapped{{"results", out}, {"assumes_extension", true}};
        out = std::move(wrapped);
    }
    emit(out);
    return 0;
}

int run_compare_bw(const Options& o)
{
    Ring ring = parse_ring(o.ring);
    auto c = load_category(o.category);
    auto t = load_coeff(o.coeff, c, ring, Variance::Covariant);
    if (t.kind() != CoeffKind::BW)
        fail(ErrorKind::UnsupportedCoefficientKind, "compare-bw needs bw coefficients");
    auto direct = bw_direct_complex(t.factorization(), t.data(), o.max_dim);
    auto thomason = thomason_complex(t, o.max_dim);
    Json degrees = Json::array();
    bool all = direct.complex.dims() == thomason.complex.dims();
    for (std::size_t n = 0; n < direct.complex.maps().size(); ++n) {
        bool same = direct.complex.maps()[n] == thomason.complex.maps()[n];
        all = all && same;
        degrees.push_back({{"degree", n}, {"dim", direct.complex.dims()[n]}, {"differential_equal", same}});
    }
    Json groups = Json::array();
    for (const auto& r : complex_homology_all(direct.complex))
        if (!r.upper_truncation_unsafe)
            groups.push_back(homology_to_json(r.group));
    emit({{"max_dim", o.max_dim}, {"equal", all}, {"degrees", degrees}, {"cohomology", groups}});
    if (!all)
        fail(ErrorKind::InternalInvariant, "the BW complex and the pulled-back Thomason complex differ");
    return 0;
}

int run_limit(const Options& o)
{
    Ring ring = parse_ring(o.ring);
    auto c = load_category(o.category);
    auto t = load_coeff(o.coeff, c, ring, o.colimit ? Variance::Contravariant : Variance::Covariant);
    Diagram d = [&] {
        if (t.kind() == CoeffKind::Module)
            return t.data();
        if (t.kind() == CoeffKind::Trivial) {
            std::vector<std::size_t> ranks(c->object_count(), t.data().rank(0));
            std::vector<ExactMatrix> maps(c->morphism_count(), ExactMatrix::identity(t.data().rank(0)));
            return Diagram::make(c, ring, t.variance(), std::move(ranks), std::move(maps));
        }
        fail(ErrorKind::UnsupportedCoefficientKind, "limit takes module or constant data on the category");
    }();
    const bool cov = d.variance() == Variance::Covariant;
    if (o.colimit == cov)
        fail(ErrorKind::VarianceMismatch, o.colimit ? "colimit takes contravariant data (a functor on C^op)"
                                                    : "limit takes covariant data");
    HomologyGroup g = cov ? finite_limit(d).group : finite_colimit(d).group;
    HomologyGroup h0 = cov ? cohomology(t, 0) : homology(t, 0);
    emit({{o.colimit ? "colimit" : "limit", homology_to_json(g)},
          {o.colimit ? "H_0" : "H^0", homology_to_json(h0)},
          {"agree", g == h0}});
    return 0;
}

void print_e2_table(const E2Page& page)
{
    std::cout << (page.homological ? "E2_{p,q}" : "E2^{p,q}") << " (rows q, columns p)\n";
    for (std::size_t q = page.qmax + 1; q-- > 0;) {
        std::cout << "q=" << q << " |";
        for (std::size_t p = 0; p <= page.pmax; ++p)
            std::cout << " " << page.dim(p, q);
        std::cout << "\n";
    }
    std::cout << "abutment:";
    for (std::size_t n = 0; n <= page.pmax + page.qmax; ++n)
        std::cout << " " << page.abutment[n].free_rank;
    std::cout << "\nEuler " << page.checks.euler_e2 << " = " << page.checks.euler_abutment
              << (page.checks.euler_holds ? " (holds)" : " (not established)") << "\n";
}

int run_leray(const Options& o)
{
    Ring ring = parse_ring(o.ring);
    auto file = functor_file_from_json(read_json_file(o.functor), fs::path(o.functor).parent_path());
    auto f = load_coeff(o.coeff, file.source, ring, fallback_variance(o));
    auto page = o.homology_variant ? colim_e2(file.functor, f, o.pmax, o.qmax)
                                   : leray_e2(file.functor, f, o.pmax, o.qmax);
    if (o.format == "table")
        print_e2_table(page);
    else
        emit(e2_to_json(page));
    return 0;
}

int run_fibration(const Options& o)
{
    Ring ring = parse_ring(o.ring);
    auto base = load_category(o.base);
    auto g = strict_functor_from_json(read_json_file(o.pseudofunctor), base, fs::path(o.pseudofunctor).parent_path());
    auto fib = grothendieck_construction(std::move(g));
    Json total{{"objects", fib.total->object_count()}, {"morphisms", fib.total->morphism_count()}};
    if (o.fibration_mode == "check") {
        emit({{"total", total}, {"certificate", certificate_to_json(is_grothendieck_fibration(fib.projection),
                                                                      fib.projection)}});
        return 0;
    }
    if (o.coeff.empty())
        fail(ErrorKind::InvalidInput, "--coeff is required for " + o.fibration_mode);
    const bool on_base = o.coeff_on == "base";
    auto f = load_coeff(o.coeff, on_base ? base : fib.total, ring, fallback_variance(o));
    if (o.fibration_mode == "locality") {
        CoeffSystem on_total = on_base ? restrict_system(f, fib.projection) : f;
        Json reports = Json::array();
        bool all = true;
        for (std::size_t b = 0; b < base->object_count(); ++b)
            for (std::size_t q = 0; q <= o.qmax; ++q) {
                auto r = locality_check(fib.projection, on_total, b, q);
                all = all && r.isomorphism;
                reports.push_back(locality_to_json(r, *base));
            }
        emit({{"total", total}, {"all_isomorphisms", all}, {"reports", reports}});
        return 0;
    }
    CoeffSystem fb = on_base ? f : base_coefficients(fib, f);
    auto page = fibration_e2(fib, fb, o.pmax, o.qmax);
    if (o.format == "table") {
        print_e2_table(page);
    } else {
        Json j = e2_to_json(page);
        j["total"] = total;
        emit(j);
    }
    return 0;
}

int run_verify(const Options& o)
{
    auto results = acceptance::run_all(o.seed, thread_count());
    bool all = true;
    if (o.format == "json") {
        Json rows = Json::array();
        for (const auto& r : results) {
            all = all && r.passed;
            rows.push_back({{"criterion", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
        }
        emit({{"seed", o.seed}, {"all_passed", all}, {"criteria", rows}});
    } else {
        for (const auto& r : results) {
            all = all && r.passed;
            std::cout << acceptance::format_line(r) << "\n";
        }
        std::cout << (all ? "all criteria passed" : "some criteria failed") << "\n";
    }
    return all ? 0 : 1;
}

void print_error(const std::string& kind, const std::string& message)
{
    Json j{{"error", {{"kind", kind}, {"message", message}}}};
    std::cerr << j.dump(2) << "\n";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Thomason cohomology and homology of finite categories"};
    app.require_subcommand(1);
    Options o;

    auto ring_opt = [&](CLI::App* c) {
        c->add_option("--ring", o.ring, "Z or Q")->check(CLI::IsMember({"Z", "Q"}));
    };
    auto format_opt = [&](CLI::App* c) {
        c->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    };

    auto* validate = app.add_subcommand("validate", "check a category table");
    validate->add_option("--category", o.category)->required()->check(CLI::ExistingFile);

    auto* nerve = app.add_subcommand("nerve", "count simplices of the nerve");
    nerve->add_option("--category", o.category)->required()->check(CLI::ExistingFile);
    nerve->add_option("--dim", o.dim)->required();
    nerve->add_flag("--nondegenerate", o.nondegenerate);
    nerve->add_flag("--list", o.list, "include simplex keys");
    format_opt(nerve);

    auto add_cohomology = [&](const char* name, bool homological) {
        auto* c = app.add_subcommand(name, homological ? "Thomason homology" : "Thomason cohomology");
        c->add_option("--category", o.category)->required()->check(CLI::ExistingFile);
        c->add_option("--coeff", o.coeff)->required()->check(CLI::ExistingFile);
        c->add_option("--degree", o.degree)->required();
        c->add_flag("--normalized", o.normalized);
        c->add_flag("--all", o.all_degrees, "report every degree up to --degree");
        if (!homological)
            c->add_flag("--homology", o.homology_variant, "chain complex with contravariant coefficients");
        ring_opt(c);
        format_opt(c);
        return c;
    };
    auto* cohomology_cmd = add_cohomology("cohomology", false);
    auto* homology_cmd = add_cohomology("homology", true);

    auto* compare = app.add_subcommand("compare-bw", "BW complex against the pulled-back Thomason complex");
    compare->add_option("--category", o.category)->required()->check(CLI::ExistingFile);
    compare->add_option("--coeff", o.coeff)->required()->check(CLI::ExistingFile);
    compare->add_option("--max-dim", o.max_dim);
    ring_opt(compare);

    auto* limit = app.add_subcommand("limit", "limit or colimit of a diagram, against degree zero");
    limit->add_option("--category", o.category)->required()->check(CLI::ExistingFile);
    limit->add_option("--coeff", o.coeff)->required()->check(CLI::ExistingFile);
    limit->add_flag("--colimit", o.colimit);
    ring_opt(limit);

    auto* leray = app.add_subcommand("leray-e2", "E2 page of u through comma categories");
    leray->add_option("--functor", o.functor)->required()->check(CLI::ExistingFile);
    leray->add_option("--coeff", o.coeff)->required()->check(CLI::ExistingFile);
    leray->add_option("--pmax", o.pmax);
    leray->add_option("--qmax", o.qmax);
    leray->add_flag("--homology", o.homology_variant);
    ring_opt(leray);
    format_opt(leray);

    auto* fibration = app.add_subcommand("fibration", "Grothendieck construction reports");
    fibration->add_option("mode", o.fibration_mode, "e2, locality or check")
        ->check(CLI::IsMember({"e2", "locality", "check"}));
    fibration->add_option("--base", o.base)->required()->check(CLI::ExistingFile);
    fibration->add_option("--pseudofunctor", o.pseudofunctor)->required()->check(CLI::ExistingFile);
    fibration->add_option("--coeff", o.coeff)->check(CLI::ExistingFile);
    fibration->add_option("--coeff-on", o.coeff_on, "base or total")->check(CLI::IsMember({"base", "total"}));
    fibration->add_option("--pmax", o.pmax);
    fibration->add_option("--qmax", o.qmax);
    fibration->add_flag("--homology", o.homology_variant);
    ring_opt(fibration);
    format_opt(fibration);

    auto* verify = app.add_subcommand("verify", "run the acceptance suite");
    verify->add_option("--seed", o.seed);
    verify->add_option("--format", o.format, "table or json")->check(CLI::IsMember({"json", "table"}));

    // rational by default where only Q is supported
    for (auto* c : {leray, fibration})
        c->preparse_callback([&](std::size_t) { o.ring = "Q"; });
    verify->preparse_callback([&](std::size_t) { o.format = "table"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (validate->parsed())
            return run_validate(o);
        if (nerve->parsed())
            return run_nerve(o);
        if (homology_cmd->parsed()) {
            o.homology_variant = true;
            return run_cohomology(o);
        }
        if (cohomology_cmd->parsed())
            return run_cohomology(o);
        if (compare->parsed())
            return run_compare_bw(o);
        if (limit->parsed())
            return run_limit(o);
        if (leray->parsed())
            return run_leray(o);
        if (fibration->parsed())
            return run_fibration(o);
        if (verify->parsed())
            return run_verify(o);
    } catch (const Error& e) {
        print_error(std::string(to_string(e.kind())), e.detail());
        return e.kind() == ErrorKind::InternalInvariant ? 2 : 1;
    } catch (const std::exception& e) {
        print_error("InternalInvariant", e.what());
        return 2;
    }
    return 1;
}
