#pragma once

#include <map>
#include <string>
#include <utility>

#include "vck/decomposition.hpp"
#include "vck/graph.hpp"

namespace vck {

// Digraph on the A-side of a decomposition: arc (u,v) whenever u can reach
// v's matched partner w = M(v) by a non-matching edge, i.e. taking u into a
// cover frees w only if v pays for it.  witness maps each arc to that w.
struct AuxDigraph {
    DirectedGraph h;
    std::map<std::pair<int, int>, int> witness;
};

AuxDigraph build_aux_digraph(const UndirectedGraph& g, const NiceDecomposition& dec);

// Vertices of A where a cover x spends more than the matching forces it to:
// an A1-vertex together with its partner, or any A3-vertex, inside x.
VertexSet overpay_set(const NiceDecomposition& dec, const VertexSet& x);

// Components of G[D] that x pays (|C|+1)/2 + 1 or more for, i.e. where x
// meets C in more than a tight cover.
std::vector<VertexSet> active_components(const NiceDecomposition& dec, const VertexSet& x);

// BFS from sources \ removed in h - removed.
VertexSet reachable_set(const DirectedGraph& h, const VertexSet& sources,
                        const VertexSet& removed);

// Vertex separators: x separates (s, t) iff h - x has no path from s \ x to
// t \ x; x may intersect s and t, and necessarily contains their overlap.
struct VertexCut {
    long long value = 0;
    VertexSet source_side; // minimum separator closest to s
    VertexSet sink_side;   // minimum separator closest to t
};
VertexCut min_vertex_cut(const DirectedGraph& h, const VertexSet& s, const VertexSet& t);

// The source-side minimal minimum separator.
VertexSet min_vertex_separator(const DirectedGraph& h, const VertexSet& s,
                               const VertexSet& t);

// t is "closest" when it is the unique minimum (s,t)-separator: the max-flow
// value reaches |t| and both extremal minimum cuts coincide with t.
bool is_closest(const DirectedGraph& h, const VertexSet& s, const VertexSet& t);

// Debug dump: one "a u v w" line per arc with its witness.
std::string dump_aux_digraph(const AuxDigraph& aux);

} // namespace vck
