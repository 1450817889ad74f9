#include "vck/digraph_aux.hpp"

#include <sstream>

#include "vck/errors.hpp"
#include "vck/flow.hpp"

namespace vck {

AuxDigraph build_aux_digraph(const UndirectedGraph& g, const NiceDecomposition& dec) {
    AuxDigraph aux;
    aux.h = DirectedGraph(g.id_bound());
    aux.h = aux.h.without(VertexSet::full_range(g.id_bound()).set_minus(dec.a));
    for (int v : dec.a) {
        if (!dec.m.covers(v) || !dec.d.contains(dec.m.mate(v)))
            throw precondition_error("build_aux_digraph: A-vertex not matched into D");
        int w = dec.m.mate(v);
        for (int u : g.neighbors(w)) {
            if (u == v || !dec.a.contains(u)) continue;
            aux.h.add_arc(u, v);
            aux.witness[{u, v}] = w;
        }
    }
    return aux;
}

VertexSet overpay_set(const NiceDecomposition& dec, const VertexSet& x) {
    VertexSet op;
    for (int v : dec.classes.a_to_singleton)
        if (x.contains(v) && x.contains(dec.m.mate(v))) op.insert(v);
    for (int v : dec.classes.a_to_nonsingleton)
        if (x.contains(v)) op.insert(v);
    return op;
}

std::vector<VertexSet> active_components(const NiceDecomposition& dec, const VertexSet& x) {
    std::vector<VertexSet> act;
    for (const auto& c : dec.classes.unmatched_nonsingletons)
        if (2 * x.set_intersect(c).size() > c.size() + 1) act.push_back(c);
    return act;
}

VertexSet reachable_set(const DirectedGraph& h, const VertexSet& sources,
                        const VertexSet& removed) {
    std::vector<int> stack;
    VertexSet seen;
    for (int v : sources) {
        if (!h.live(v))
            throw precondition_error("reachable_set: source not in digraph");
        if (!removed.contains(v)) {
            seen.insert(v);
            stack.push_back(v);
        }
    }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : h.out_neighbors(v))
            if (!removed.contains(u) && !seen.contains(u)) {
                seen.insert(u);
                stack.push_back(u);
            }
    }
    return seen;
}

namespace {

struct SplitFlow {
    // Unit-capacity vertex splitting: v_in = 2i, v_out = 2i+1; cutting the
    // in->out arc deletes the vertex, so minimum cuts are vertex separators
    // and sources/sinks themselves remain deletable.
    std::vector<int> ids, rank;
    Dinic dinic;
    int src, sink;

    SplitFlow(const DirectedGraph& h, const VertexSet& s, const VertexSet& t)
        : ids(h.vertices()), rank(h.id_bound(), -1),
          dinic(2 * (int)h.vertices().size() + 2) {
        int n = (int)ids.size();
        for (int i = 0; i < n; ++i) rank[ids[i]] = i;
        src = 2 * n;
        sink = 2 * n + 1;
        const long long inf = 1LL << 40;
        for (int i = 0; i < n; ++i) dinic.add_edge(2 * i, 2 * i + 1, 1);
        for (auto [u, v] : h.arcs()) dinic.add_edge(2 * rank[u] + 1, 2 * rank[v], inf);
        for (int v : s) {
            if (rank[v] < 0) throw precondition_error("vertex cut: s outside digraph");
            dinic.add_edge(src, 2 * rank[v], inf);
        }
        for (int v : t) {
            if (rank[v] < 0) throw precondition_error("vertex cut: t outside digraph");
            dinic.add_edge(2 * rank[v] + 1, sink, inf);
        }
    }
};

} // namespace

VertexCut min_vertex_cut(const DirectedGraph& h, const VertexSet& s, const VertexSet& t) {
    SplitFlow sf(h, s, t);
    VertexCut cut;
    cut.value = sf.dinic.max_flow(sf.src, sf.sink);

    auto from_src = sf.dinic.residual_reachable(sf.src);
    auto to_sink = sf.dinic.residual_coreach(sf.sink);
    for (size_t i = 0; i < sf.ids.size(); ++i) {
        if (from_src[2 * i] && !from_src[2 * i + 1]) cut.source_side.insert(sf.ids[i]);
        if (to_sink[2 * i + 1] && !to_sink[2 * i]) cut.sink_side.insert(sf.ids[i]);
    }
    if ((long long)cut.source_side.size() != cut.value ||
        (long long)cut.sink_side.size() != cut.value)
        throw internal_error("min_vertex_cut: extremal cuts disagree with flow value");
    return cut;
}

VertexSet min_vertex_separator(const DirectedGraph& h, const VertexSet& s,
                               const VertexSet& t) {
    return min_vertex_cut(h, s, t).source_side;
}

bool is_closest(const DirectedGraph& h, const VertexSet& s, const VertexSet& t) {
    auto cut = min_vertex_cut(h, s, t);
    return cut.value == (long long)t.size() && cut.source_side == t && cut.sink_side == t;
}

std::string dump_aux_digraph(const AuxDigraph& aux) {
    std::ostringstream out;
    out << "p aux " << aux.h.vertex_count() << ' ' << aux.h.arc_count() << '\n';
    for (auto [arc, w] : aux.witness)
        out << "a " << arc.first << ' ' << arc.second << ' ' << w << '\n';
    return out.str();
}

} // namespace vck
