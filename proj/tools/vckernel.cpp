#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "vck/decomposition.hpp"
#include "vck/digraph_aux.hpp"
#include "vck/dimacs.hpp"
#include "vck/errors.hpp"
#include "vck/field_matrix.hpp"
#include "vck/generators.hpp"
#include "vck/graph.hpp"
#include "vck/kernelizer.hpp"
#include "vck/matching.hpp"
#include "vck/oracle.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_parse = 3;
constexpr int exit_internal = 4;

struct RunConfig {
    std::string input;
    std::string out = "-";
    std::string stats_out;
    std::optional<long long> k;
    uint64_t seed = 1;
    uint64_t prime = vck::default_prime;
    int oracle_cap = 20;
    std::string family;
    std::string params;
    long long ell = 0;
    bool corrupt = false;
};

vck::DimacsInstance load_instance(const std::string& path) {
    if (path == "-") return vck::read_dimacs_instance(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    return vck::read_dimacs_instance(in);
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) return;
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

long long require_k(const RunConfig& cfg, const vck::DimacsInstance& inst) {
    if (cfg.k) return *cfg.k;
    if (inst.k) return *inst.k;
    throw CLI::ValidationError("--k", "no budget given (use --k or a 'c k <int>' line)");
}

void check_prime(uint64_t p) {
    if (!vck::is_probable_prime(p))
        throw CLI::ValidationError("--prime", std::to_string(p) + " is not prime");
}

std::map<std::string, std::string> parse_params(const std::string& params) {
    std::map<std::string, std::string> out;
    std::stringstream ss(params);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--params", "expected key=value, got '" + item + "'");
        out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}

json round_records(const vck::KernelOutput& res) {
    json rounds = json::array();
    for (const auto& r : res.rounds) {
        rounds.push_back(json{{"family_size", r.family_size},
                              {"repset_size", r.repset_size},
                              {"selected", r.selected}});
    }
    return rounds;
}

int run_kernelize(const RunConfig& cfg) {
    check_prime(cfg.prime);
    auto t0 = std::chrono::steady_clock::now();
    vck::DimacsInstance inst = load_instance(cfg.input);
    long long k = require_k(cfg, inst);

    vck::KernelOutput res = vck::kernelize(inst.graph, k, cfg.seed, cfg.prime);
    auto t1 = std::chrono::steady_clock::now();
    double total_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

    write_text(cfg.out, vck::to_dimacs(res.g_out, res.k_out));

    json c_rel_sizes = json::array();
    for (const auto& c : res.c_rel) c_rel_sizes.push_back(c.size());
    json stats{{"schema", "vckernel/1"},
               {"command", "kernelize"},
               {"verdict", vck::to_string(res.verdict)},
               {"n_in", inst.graph.vertex_count()},
               {"m_in", inst.graph.edge_count()},
               {"k_in", k},
               {"n_out", res.g_out.vertex_count()},
               {"m_out", res.g_out.edge_count()},
               {"k_out", res.k_out},
               {"ell_in", res.ell_in},
               {"ell_out", res.ell_out},
               {"p_out", res.p_out},
               {"forced_in", res.forced_in.size()},
               {"removed_out", res.removed_out.size()},
               {"c_rel_sizes", c_rel_sizes},
               {"rounds", round_records(res)},
               {"error_bound", (double)res.error_bound},
               {"error_numerator", res.sz_degree},
               {"error_denominator", res.prime},
               {"seed", res.seed},
               {"prime", res.prime},
               {"timings", json{{"total_ms", total_ms}}}};
    if (!cfg.stats_out.empty()) write_text(cfg.stats_out, stats.dump(2) + "\n");
    return exit_ok;
}

int run_gen(const RunConfig& cfg) {
    auto p = parse_params(cfg.params);
    auto get_int = [&](const std::string& key) {
        auto it = p.find(key);
        if (it == p.end())
            throw CLI::ValidationError("--params", "missing parameter '" + key + "'");
        return std::stoll(it->second);
    };
    auto get_double = [&](const std::string& key) {
        auto it = p.find(key);
        if (it == p.end())
            throw CLI::ValidationError("--params", "missing parameter '" + key + "'");
        return std::stod(it->second);
    };

    vck::UndirectedGraph g(0);
    if (cfg.family == "odd-cycles") {
        g = vck::odd_cycles((int)get_int("t"), (int)get_int("s"));
    } else if (cfg.family == "gnp") {
        g = vck::gnp((int)get_int("n"), get_double("p"), cfg.seed);
    } else if (cfg.family == "factor-critical-chords") {
        g = vck::factor_critical_chords((int)get_int("n"), (int)get_int("extra"), cfg.seed);
    } else {
        throw CLI::ValidationError("--family", "unknown family '" + cfg.family + "'");
    }
    long long k = vck::suggested_k(g, cfg.ell);
    write_text(cfg.out.empty() ? "-" : cfg.out, vck::to_dimacs(g, k));
    return exit_ok;
}

int run_stats(const RunConfig& cfg) {
    vck::DimacsInstance inst = load_instance(cfg.input);
    const vck::UndirectedGraph& g = inst.graph;
    vck::LpResult lp = vck::lp_value(g);
    vck::Matching mm = vck::maximum_matching(g);
    long long lb = lp.cost_half_units - mm.size();

    json stats{{"schema", "vckernel/1"},
               {"command", "stats"},
               {"n", g.vertex_count()},
               {"m", g.edge_count()},
               {"components", (long long)g.connected_components().size()},
               {"lp_half_units", lp.cost_half_units},
               {"mm", mm.size()},
               {"lower_bound", lb}};
    std::optional<long long> k = cfg.k ? cfg.k : inst.k;
    if (k) {
        stats["k"] = *k;
        stats["ell"] = *k - lb;
    }

    long long probe_k = k ? *k : lb;
    vck::NtResult nt = vck::nt_reduce(g, probe_k);
    stats["preprocessed_n"] = nt.graph.vertex_count();
    stats["preprocessed_forced_in"] = nt.forced_in.size();
    stats["preprocessed_removed_out"] = nt.removed_out.size();
    if (nt.graph.vertex_count() > 0) {
        vck::NiceDecomposition dec = vck::nice_decomposition(nt.graph);
        json d{{"a", dec.a.size()},
               {"b", dec.b.size()},
               {"d", dec.d.size()},
               {"matching", dec.m.size()},
               {"a_to_singleton", dec.classes.a_to_singleton.size()},
               {"a_to_nonsingleton", dec.classes.a_to_nonsingleton.size()},
               {"matched_singletons", dec.classes.matched_singletons.size()},
               {"matched_nonsingletons", dec.classes.matched_nonsingletons.size()},
               {"unmatched_nonsingletons", dec.classes.unmatched_nonsingletons.size()}};
        stats["decomposition"] = d;
    }
    write_text(cfg.stats_out.empty() ? "-" : cfg.stats_out, stats.dump(2) + "\n");
    return exit_ok;
}

// One named property at a time; a property is "pass", "fail: <detail>" or
// "skip: <reason>" and only "fail" flips the exit code.
struct VerifyLog {
    std::vector<std::string> lines;
    bool failed = false;
    bool skipped = false;

    void pass(const std::string& name) { lines.push_back(name + ": pass"); }
    void fail(const std::string& name, const std::string& why) {
        lines.push_back(name + ": fail: " + why);
        failed = true;
    }
    void skip(const std::string& name, const std::string& why) {
        lines.push_back(name + ": skip: " + why);
        skipped = true;
    }
};

void verify_property(VerifyLog& log, const std::string& name, const std::function<void()>& body) {
    try {
        body();
        log.pass(name);
    } catch (const vck::oracle_cap_error& e) {
        log.skip(name, e.what());
    } catch (const std::exception& e) {
        log.fail(name, e.what());
    }
}

int run_verify(const RunConfig& cfg) {
    check_prime(cfg.prime);
    vck::DimacsInstance inst = load_instance(cfg.input);
    const vck::UndirectedGraph& g = inst.graph;
    long long k = cfg.k ? *cfg.k : (inst.k ? *inst.k : vck::suggested_k(g, 1));
    VerifyLog log;

    verify_property(log, "lp-preprocessing-equivalence", [&] {
        vck::NtResult nt = vck::nt_reduce(g, k);
        if (nt.k < 0) {
            vck::OracleReport rep = vck::min_vc_bruteforce(g, cfg.oracle_cap);
            if (rep.min_size <= k) throw vck::internal_error("preprocessing rejected a yes-instance");
            return;
        }
        if (!vck::check_equivalence(g, k, nt.graph, nt.k, cfg.oracle_cap))
            throw vck::internal_error("preprocessed instance is not equivalent");
    });

    vck::NtResult nt = vck::nt_reduce(g, std::max<long long>(k, 0));
    bool have_dec = nt.graph.vertex_count() > 0;
    vck::NiceDecomposition dec;
    if (have_dec) dec = vck::nice_decomposition(nt.graph);
    if (cfg.corrupt && have_dec && !dec.d.empty()) {
        // Deliberately break the partition so the validator must notice.
        int v = dec.d.ids().front();
        dec.d.erase(v);
        dec.b.insert(v);
    }

    verify_property(log, "decomposition-valid", [&] {
        if (!have_dec) return;
        vck::validate_decomposition(nt.graph, dec);
    });

    verify_property(log, "cover-lower-bound", [&] {
        if (!have_dec) return;
        vck::OracleReport rep = vck::min_vc_bruteforce(nt.graph, cfg.oracle_cap);
        long long lb = vck::vc_lower_bound(dec);
        if (rep.min_size < lb)
            throw vck::internal_error("minimum cover " + std::to_string(rep.min_size) +
                                      " below decomposition bound " + std::to_string(lb));
    });

    verify_property(log, "dominant-cover-reachability", [&] {
        if (!have_dec || dec.a.empty()) return;
        vck::AuxDigraph aux = vck::build_aux_digraph(nt.graph, dec);
        const vck::VertexSet& a3 = dec.classes.a_to_nonsingleton;
        for (const vck::VertexSet& x : vck::dominant_vcs(nt.graph, dec, cfg.oracle_cap)) {
            vck::VertexSet xop = vck::overpay_set(dec, x);
            vck::VertexSet reach = vck::reachable_set(aux.h, a3, xop);
            for (int v : dec.a.ids()) {
                bool in_reach = reach.contains(v);
                if (in_reach && x.contains(v))
                    throw vck::internal_error("reachable vertex inside a dominant cover");
                if (!in_reach && !x.contains(v))
                    throw vck::internal_error("unreachable vertex outside a dominant cover");
            }
            if (!a3.empty() && !vck::is_closest(aux.h, a3, xop))
                throw vck::internal_error("overpay set is not the closest separator");
        }
    });

    verify_property(log, "kernel-equivalence", [&] {
        vck::KernelOutput res = vck::kernelize(g, k, cfg.seed, cfg.prime);
        vck::OracleReport rep = vck::min_vc_bruteforce(g, cfg.oracle_cap);
        bool truth = rep.min_size <= k;
        if (res.verdict == vck::Verdict::definite_yes) {
            if (!truth) throw vck::internal_error("definite-yes on a no-instance");
            return;
        }
        if (res.verdict == vck::Verdict::definite_no) {
            if (truth) throw vck::internal_error("definite-no on a yes-instance");
            return;
        }
        if (res.ell_out != res.ell_in) throw vck::internal_error("excess changed across reduction");
        vck::OracleReport out_rep = vck::min_vc_bruteforce(res.g_out, cfg.oracle_cap);
        bool reduced_truth = out_rep.min_size <= res.k_out;
        if (truth && !reduced_truth)
            throw vck::internal_error("reduction turned a yes-instance into no");
        if (!truth && reduced_truth)
            throw vck::internal_error("reduction turned a no-instance into yes");
    });

    for (const std::string& line : log.lines) std::cout << line << "\n";
    if (log.skipped) std::cerr << "warning: some properties were skipped (oracle cap)\n";
    return log.failed ? exit_internal : exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"vertex cover kernelization above the LP/matching gap"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub, bool needs_input) {
        if (needs_input)
            sub->add_option("--in", cfg.input, "input DIMACS file ('-' for stdin)")->required();
        sub->add_option("--k", cfg.k, "cover budget (overrides any 'c k' line)");
        sub->add_option("--seed", cfg.seed, "random seed");
        sub->add_option("--prime", cfg.prime, "field prime for the random matrices");
        sub->add_option("--oracle-cap", cfg.oracle_cap, "largest vertex count brute force accepts");
        sub->add_option("--out", cfg.out, "instance output path ('-' for stdout)");
        sub->add_option("--stats-out", cfg.stats_out, "JSON stats output path ('-' for stdout)");
    };

    CLI::App* kern = app.add_subcommand("kernelize", "reduce an instance");
    add_common(kern, true);
    CLI::App* verify = app.add_subcommand("verify", "run the property battery on an instance");
    add_common(verify, true);
    verify->add_flag("--corrupt", cfg.corrupt, "corrupt the decomposition first (self-test)")
        ->group("");
    CLI::App* gen = app.add_subcommand("gen", "generate a test instance");
    add_common(gen, false);
    gen->add_option("--family", cfg.family,
                    "odd-cycles | gnp | factor-critical-chords")
        ->required();
    gen->add_option("--params", cfg.params, "family parameters, e.g. 't=3,s=2'")->required();
    gen->add_option("--ell", cfg.ell, "requested excess for the suggested budget");
    CLI::App* stats = app.add_subcommand("stats", "report instance measurements");
    add_common(stats, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (kern->parsed()) return run_kernelize(cfg);
        if (verify->parsed()) return run_verify(cfg);
        if (gen->parsed()) return run_gen(cfg);
        if (stats->parsed()) return run_stats(cfg);
        return exit_usage;
    } catch (const vck::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_parse;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const vck::precondition_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
}
