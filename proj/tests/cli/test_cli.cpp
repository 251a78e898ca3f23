#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

using Json = nlohmann::ordered_json;

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args, bool merge_stderr = false)
{
    std::string cmd = "cd " CATCOH_EXAMPLES " && " CATCOH_BIN " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0)
        r.out.append(buf.data(), n);
    int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

Json run_json(const std::string& args)
{
    auto r = run(args);
    REQUIRE(r.status == 0);
    return Json::parse(r.out);
}

} // namespace

TEST_CASE("Z/2 in degree two")
{
    auto j = run_json("cohomology --category bz2.json --coeff const_Z.json --degree 2");
    CHECK(j["free_rank"] == 0);
    CHECK(j["torsion"] == Json::parse("[2]"));
    auto h = run_json("homology --category bz2.json --coeff const_Z_homology.json --degree 1");
    CHECK(h["torsion"] == Json::parse("[2]"));
}

TEST_CASE("every degree at once")
{
    auto j = run_json("cohomology --category bz2.json --coeff const_Z.json --degree 4 --all");
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 5);
    CHECK(j[0]["free_rank"] == 1);
    CHECK(j[1]["torsion"].empty());
    CHECK(j[2]["torsion"] == Json::parse("[2]"));
    CHECK(j[3]["torsion"].empty());
    CHECK(j[4]["torsion"] == Json::parse("[2]"));
}

TEST_CASE("nerve counts")
{
    CHECK(run_json("nerve --category bz2.json --dim 3")["count"] == 8);
    CHECK(run_json("nerve --category bz2.json --dim 3 --nondegenerate")["count"] == 1);
    CHECK(run_json("nerve --category circle_poset.json --dim 1")["count"] == 8);
}

TEST_CASE("errors are reported as JSON with exit code 1")
{
    auto r = run("validate --category broken.json", true);
    CHECK(r.status == 1);
    auto j = Json::parse(r.out);
    CHECK(j["error"]["kind"] == "NonAssociative");
    CHECK(run("validate --category bz2.json").status == 0);
    CHECK(run("cohomology --category bz2.json --coeff missing.json --degree 1").status != 0);
    CHECK(run("frobnicate").status != 0);
}

TEST_CASE("output is deterministic and well formed")
{
    for (const std::string args : {"leray-e2 --functor torus_projection.json --coeff const_Q.json --pmax 1 --qmax 1",
                                   "compare-bw --category interval.json --coeff bw_interval.json --max-dim 2",
                                   "fibration check --base interval.json --pseudofunctor three_object_fibration.json"}) {
        CAPTURE(args);
        auto a = run(args);
        auto b = run(args);
        CHECK(a.status == 0);
        CHECK(a.out == b.out);
        CHECK(Json::parse(a.out).dump(2) + "\n" == a.out);
    }
}

TEST_CASE("torus E2")
{
    auto j = run_json("leray-e2 --functor torus_projection.json --coeff const_Q.json --pmax 1 --qmax 1");
    CHECK(j["grid"] == Json::parse("[[1,1],[1,1]]"));
    CHECK(j["abutment"] == Json::parse("[1,2,1]"));
}

TEST_CASE("fibrations")
{
    auto c = run_json("fibration check --base interval.json --pseudofunctor three_object_fibration.json");
    CHECK(c["total"]["objects"] == 3);
    CHECK(c["total"]["morphisms"] == 5);
    CHECK(c["certificate"]["is_fibration"] == true);
    auto e = run_json("fibration e2 --base interval.json --pseudofunctor three_object_fibration.json --coeff const_Q.json --pmax 1 --qmax 1");
    CHECK(e["abutment"][0] == 1);
}

TEST_CASE("BW agreement and limits")
{
    CHECK(run_json("compare-bw --category interval.json --coeff bw_interval.json --max-dim 2")["equal"] == true);
    auto l = run_json("limit --category interval.json --coeff module_times3.json");
    CHECK(l["agree"] == true);
    CHECK(l["limit"]["free_rank"] == 1);
}

TEST_CASE("truncated input is flagged")
{
    auto j = run_json("cohomology --category interval.json --coeff truncated_interval.json --degree 0");
    CHECK(j["assumes_extension"] == true);
    CHECK(j["results"]["free_rank"] == 1);
    CHECK(run("cohomology --category interval.json --coeff truncated_interval.json --degree 1").status == 1);
}
