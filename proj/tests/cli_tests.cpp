#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "json.hpp"

#include "vck/dimacs.hpp"
#include "vck/graph.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

// Scratch directory per test process; files carry their test's name.
fs::path scratch() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("vck_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

struct RunResult {
    int code = -1;
    std::string out, err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
}

RunResult run_cli(const std::string& args, const std::string& tag) {
    fs::path out = scratch() / (tag + ".stdout");
    fs::path err = scratch() / (tag + ".stderr");
    std::string cmd = std::string(VCK_CLI_PATH) + " " + args + " >" + out.string() +
                      " 2>" + err.string();
    int status = std::system(cmd.c_str());
    RunResult res;
    res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    res.out = slurp(out);
    res.err = slurp(err);
    return res;
}

size_t count_lines_starting(const std::string& text, const std::string& prefix) {
    size_t n = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (line.rfind(prefix, 0) == 0) ++n;
    return n;
}

// Drop the timing object so two stats dumps of the same run can be compared.
std::string strip_timings(std::string text) {
    std::istringstream in(text);
    std::string line, kept;
    while (std::getline(in, line))
        if (line.find("total_ms") == std::string::npos &&
            line.find("\"timings\"") == std::string::npos)
            kept += line + "\n";
    return kept;
}

std::string two_triangles_text() {
    return "p edge 6 6\n"
           "e 1 2\ne 2 3\ne 1 3\n"
           "e 4 5\ne 5 6\ne 4 6\n";
}

std::string hub_text() {
    // two C5s plus a hub adjacent to three consecutive vertices of each
    vck::UndirectedGraph g(11);
    for (int b : {0, 5})
        for (int i = 0; i < 5; ++i) g.add_edge(b + i, b + (i + 1) % 5);
    for (int v : {0, 1, 2, 5, 6, 7}) g.add_edge(10, v);
    return vck::to_dimacs(g, std::nullopt);
}

} // namespace

TEST_CASE("gen emits canonical instances") {
    auto r = run_cli("gen --family odd-cycles --params t=1,s=1", "gen_tri");
    CHECK(r.code == 0);
    CHECK(r.out == "p edge 3 3\nc k 2\ne 1 2\ne 1 3\ne 2 3\n");

    auto r2 = run_cli("gen --family odd-cycles --params t=3,s=2 --ell 1", "gen_c5");
    CHECK(r2.code == 0);
    CHECK(r2.out.rfind("p edge 15 15\nc k 10\n", 0) == 0);
    CHECK(count_lines_starting(r2.out, "e ") == 15);
}

TEST_CASE("gen random families are seed-reproducible") {
    auto a = run_cli("gen --family gnp --params n=20,p=0.3 --seed 5", "gnp_a");
    auto b = run_cli("gen --family gnp --params n=20,p=0.3 --seed 5", "gnp_b");
    auto c = run_cli("gen --family gnp --params n=20,p=0.3 --seed 6", "gnp_c");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);

    auto f = run_cli("gen --family factor-critical-chords --params n=7,extra=3 --seed 2",
                     "fcc");
    CHECK(f.code == 0);
    CHECK(f.out.rfind("p edge 7 10\nc k 4\n", 0) == 0);
}

TEST_CASE("gen rejects bad requests") {
    CHECK(run_cli("gen --family no-such --params n=3", "gen_bad1").code == 2);
    CHECK(run_cli("gen --family gnp --params n=20", "gen_bad2").code == 2); // missing p
    CHECK(run_cli("gen --family gnp --params n20,p=0.1", "gen_bad3").code == 2);
    CHECK(run_cli("gen --family odd-cycles --params t=1,s=0", "gen_bad4").code == 2);
}

TEST_CASE("kernelize resolves easy instances completely") {
    fs::path in = scratch() / "tri2.dimacs";
    spit(in, two_triangles_text());
    fs::path stats = scratch() / "tri2.json";
    auto r = run_cli("kernelize --in " + in.string() + " --k 4 --stats-out " +
                         stats.string(),
                     "kern_tri");
    CHECK(r.code == 0);
    CHECK(r.out == "p edge 0 0\nc k 0\n");
    json j = json::parse(slurp(stats));
    CHECK(j["schema"] == "vckernel/1");
    CHECK(j["command"] == "kernelize");
    CHECK(j["verdict"] == "definite-yes");
    CHECK(j["k_in"] == 4);
    CHECK(j["k_out"] == 0);
    CHECK(j["ell_in"] == 0);
    CHECK(j["n_out"] == 0);
    CHECK(j["rounds"].empty());
    CHECK(j["error_bound"] == 0.0);
    CHECK(j["seed"] == 1); // default seed

    auto no = run_cli("kernelize --in " + in.string() + " --k 3 --stats-out -", "kern_no");
    CHECK(no.code == 0);
    CHECK(no.out.find("\"verdict\": \"definite-no\"") != std::string::npos);
    CHECK(no.out.find("\"ell_in\": -1") != std::string::npos);
}

TEST_CASE("kernelize budget comes from the file unless overridden") {
    fs::path in = scratch() / "c5.dimacs";
    spit(in, "p edge 5 5\nc k 2\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 1 5\n");
    auto file_k = run_cli("kernelize --in " + in.string() + " --stats-out -", "k_file");
    CHECK(file_k.code == 0);
    CHECK(file_k.out.find("\"verdict\": \"definite-no\"") != std::string::npos);

    auto flag_k = run_cli("kernelize --in " + in.string() + " --k 3 --stats-out -",
                          "k_flag");
    CHECK(flag_k.code == 0);
    CHECK(flag_k.out.find("\"verdict\": \"definite-yes\"") != std::string::npos);

    fs::path nok = scratch() / "nok.dimacs";
    spit(nok, "p edge 2 1\ne 1 2\n");
    auto missing = run_cli("kernelize --in " + nok.string(), "k_missing");
    CHECK(missing.code == 2);
    CHECK(missing.err.find("usage error") != std::string::npos);
}

TEST_CASE("kernelize runs the selection game deterministically") {
    fs::path in = scratch() / "hub.dimacs";
    spit(in, hub_text());
    fs::path out1 = scratch() / "hub1.out";
    fs::path out2 = scratch() / "hub2.out";
    fs::path st1 = scratch() / "hub1.json";
    fs::path st2 = scratch() / "hub2.json";

    auto r1 = run_cli("kernelize --in " + in.string() + " --k 7 --seed 3 --out " +
                          out1.string() + " --stats-out " + st1.string(),
                      "hub_a");
    auto r2 = run_cli("kernelize --in " + in.string() + " --k 7 --seed 3 --out " +
                          out2.string() + " --stats-out " + st2.string(),
                      "hub_b");
    CHECK(r1.code == 0);
    CHECK(r2.code == 0);
    CHECK(slurp(out1) == slurp(out2));
    CHECK(strip_timings(slurp(st1)) == strip_timings(slurp(st2)));

    json j = json::parse(slurp(st1));
    CHECK(j["verdict"] == "reduced");
    CHECK(j["ell_in"] == 1);
    CHECK(j["ell_out"] == 1);
    CHECK(j["p_out"] == 2);
    REQUIRE(j["c_rel_sizes"].size() == 1);
    CHECK(j["c_rel_sizes"][0] == 5);
    REQUIRE(j["rounds"].size() == 1);
    CHECK(j["rounds"][0]["family_size"] == 1);
    CHECK(j["rounds"][0]["repset_size"] == 1);
    CHECK(j["rounds"][0]["selected"] == 1);
    CHECK(j["error_numerator"].get<long long>() > 0);
    CHECK(j["error_denominator"] == 2305843009213693951ULL);
    CHECK(j["error_bound"].get<double>() > 0.0);
    CHECK(j["error_bound"].get<double>() < 1e-9);
    CHECK(j["seed"] == 3);

    // the emitted instance is itself valid DIMACS with the same budget
    std::ifstream emitted(out1);
    vck::DimacsInstance inst = vck::read_dimacs_instance(emitted);
    CHECK(inst.graph.vertex_count() == 11);
    REQUIRE(inst.k.has_value());
    CHECK(*inst.k == 7);
}

TEST_CASE("malformed input reports a parse failure") {
    fs::path bad = scratch() / "bad.dimacs";
    spit(bad, "p edge 2 1\ne 1 3\n");
    auto r = run_cli("kernelize --in " + bad.string() + " --k 1", "parse_bad");
    CHECK(r.code == 3);
    CHECK(r.err.find("parse error") != std::string::npos);
    CHECK(r.err.find("line 2") != std::string::npos);

    fs::path badk = scratch() / "badk.dimacs";
    spit(badk, "p edge 2 1\nc k oops\ne 1 2\n");
    CHECK(run_cli("kernelize --in " + badk.string() + " --k 1", "parse_badk").code == 3);

    CHECK(run_cli("kernelize --in " + scratch().string() + "/missing.dimacs --k 1",
                  "no_file")
              .code == 4);
}

TEST_CASE("prime validation") {
    fs::path in = scratch() / "tri.dimacs";
    spit(in, "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    CHECK(run_cli("kernelize --in " + in.string() + " --k 2 --prime 100", "bad_prime")
              .code == 2);
    CHECK(run_cli("kernelize --in " + in.string() + " --k 2 --prime 1000003", "ok_prime")
              .code == 0);
}

TEST_CASE("stats reports the decomposition shape") {
    fs::path in = scratch() / "c5p.dimacs";
    // C5 with a matched pendant pair
    spit(in, "p edge 7 7\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 1 5\ne 1 6\ne 6 7\n");
    auto r = run_cli("stats --in " + in.string() + " --k 4", "stats_c5p");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["schema"] == "vckernel/1");
    CHECK(j["command"] == "stats");
    CHECK(j["n"] == 7);
    CHECK(j["m"] == 7);
    CHECK(j["lp_half_units"] == 7);
    CHECK(j["mm"] == 3);
    CHECK(j["lower_bound"] == 4);
    CHECK(j["k"] == 4);
    CHECK(j["ell"] == 0);
    CHECK(j["preprocessed_n"] == 7);
    CHECK(j["decomposition"]["a"] == 1);
    CHECK(j["decomposition"]["d"] == 6);
    CHECK(j["decomposition"]["b"] == 0);
    CHECK(j["decomposition"]["matched_singletons"] == 1);
    CHECK(j["decomposition"]["unmatched_nonsingletons"] == 1);
}

TEST_CASE("verify battery passes on a sound instance") {
    fs::path in = scratch() / "ver.dimacs";
    spit(in, two_triangles_text());
    auto r = run_cli("verify --in " + in.string() + " --k 4", "verify_ok");
    CHECK(r.code == 0);
    for (const char* name :
         {"lp-preprocessing-equivalence", "decomposition-valid", "cover-lower-bound",
          "dominant-cover-reachability", "kernel-equivalence"}) {
        INFO(name);
        CHECK(r.out.find(std::string(name) + ": pass") != std::string::npos);
    }
    CHECK(r.out.find("fail") == std::string::npos);

    fs::path hub = scratch() / "ver_hub.dimacs";
    spit(hub, hub_text());
    auto rh = run_cli("verify --in " + hub.string() + " --k 7", "verify_hub");
    CHECK(rh.code == 0);
    CHECK(rh.out.find("dominant-cover-reachability: pass") != std::string::npos);
    CHECK(rh.out.find("fail") == std::string::npos);
}

TEST_CASE("verify notices a corrupted decomposition") {
    fs::path in = scratch() / "ver_bad.dimacs";
    spit(in, two_triangles_text());
    auto r = run_cli("verify --in " + in.string() + " --k 4 --corrupt", "verify_bad");
    CHECK(r.code == 4);
    CHECK(r.out.find("decomposition-valid: fail") != std::string::npos);
}

TEST_CASE("verify skips oracle work above the cap") {
    fs::path big = scratch() / "big.dimacs";
    auto gen = run_cli("gen --family gnp --params n=30,p=0.2 --seed 9 --out " +
                           big.string(),
                       "gen_big");
    REQUIRE(gen.code == 0);
    auto r = run_cli("verify --in " + big.string(), "verify_big");
    CHECK(r.code == 0);
    CHECK(r.out.find(": skip") != std::string::npos);
    CHECK(r.out.find("decomposition-valid: pass") != std::string::npos);
    CHECK(r.err.find("skipped") != std::string::npos);

    // a higher cap turns the skips into real checks
    auto r2 = run_cli("verify --in " + big.string() + " --oracle-cap 32", "verify_big2");
    CHECK(r2.code == 0);
    CHECK(r2.out.find(": skip") == std::string::npos);
    CHECK(r2.out.find("fail") == std::string::npos);
}

TEST_CASE("usage errors") {
    CHECK(run_cli("", "no_sub").code == 2);
    CHECK(run_cli("kernelize", "no_in").code == 2);
    CHECK(run_cli("frobnicate --in x", "bad_sub").code == 2);
}
