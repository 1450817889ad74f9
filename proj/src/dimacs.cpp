#include "vck/dimacs.hpp"

#include <sstream>

#include "vck/errors.hpp"

namespace vck {

namespace {

bool parse_int(const std::string& tok, long long& out) {
    if (tok.empty()) return false;
    size_t pos = 0;
    try {
        out = std::stoll(tok, &pos);
    } catch (...) {
        return false;
    }
    return pos == tok.size();
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

} // namespace

DimacsInstance read_dimacs_instance(std::istream& in) {
    DimacsInstance inst;
    bool have_header = false;
    long long n = 0;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokens(line);
        if (toks.empty()) continue;
        if (toks[0] == "c") {
            // "c k <int>" carries the budget, everything else is free text
            if (toks.size() >= 2 && toks[1] == "k") {
                long long kval;
                if (toks.size() != 3 || !parse_int(toks[2], kval))
                    throw parse_error(lineno, "malformed budget comment, expected 'c k <int>'");
                inst.k = kval;
            }
            continue;
        }
        if (toks[0] == "p") {
            if (have_header)
                throw parse_error(lineno, "duplicate problem line");
            long long m;
            if (toks.size() != 4 || toks[1] != "edge" || !parse_int(toks[2], n) ||
                !parse_int(toks[3], m) || n < 0 || m < 0)
                throw parse_error(lineno, "malformed problem line, expected 'p edge n m'");
            have_header = true;
            inst.graph = UndirectedGraph((int)n);
            continue;
        }
        if (toks[0] == "e") {
            if (!have_header)
                throw parse_error(lineno, "edge before problem line");
            long long u, v;
            if (toks.size() != 3 || !parse_int(toks[1], u) || !parse_int(toks[2], v))
                throw parse_error(lineno, "malformed edge line, expected 'e u v'");
            if (u < 1 || u > n || v < 1 || v > n)
                throw parse_error(lineno, "edge endpoint out of range");
            if (u == v)
                throw parse_error(lineno, "self-loop");
            inst.graph.add_edge((int)u - 1, (int)v - 1);
            continue;
        }
        throw parse_error(lineno, "unrecognized line type '" + toks[0] + "'");
    }
    if (!have_header)
        throw parse_error(lineno, "missing problem line");
    return inst;
}

DimacsInstance read_dimacs_instance(const std::string& text) {
    std::istringstream ss(text);
    return read_dimacs_instance(ss);
}

UndirectedGraph parse_dimacs(std::istream& in) { return read_dimacs_instance(in).graph; }

UndirectedGraph parse_dimacs(const std::string& text) {
    std::istringstream ss(text);
    return parse_dimacs(ss);
}

std::string to_dimacs(const UndirectedGraph& g, std::optional<long long> k) {
    auto vs = g.vertices();
    std::vector<int> rank(g.id_bound(), -1);
    for (size_t i = 0; i < vs.size(); ++i) rank[vs[i]] = (int)i + 1;
    std::ostringstream out;
    out << "p edge " << vs.size() << ' ' << g.edge_count() << '\n';
    if (k) out << "c k " << *k << '\n';
    for (int v : vs)
        for (int u : g.neighbors(v))
            if (u > v) out << "e " << rank[v] << ' ' << rank[u] << '\n';
    return out.str();
}

std::string canonical_text(const UndirectedGraph& g) {
    std::ostringstream out;
    for (int v : g.vertices()) out << "v " << v << '\n';
    for (int v : g.vertices())
        for (int u : g.neighbors(v))
            if (u > v) out << "e " << v << ' ' << u << '\n';
    return out.str();
}

} // namespace vck
