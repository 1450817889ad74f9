#include "vck/graph.hpp"

#include "vck/errors.hpp"

namespace vck {

void UndirectedGraph::add_edge(int u, int v) {
    if (!live(u) || !live(v))
        throw precondition_error("add_edge: endpoint not a live vertex");
    if (u == v)
        throw precondition_error("add_edge: self-loop");
    if (has_edge(u, v)) return; // parallel edges collapse
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++edge_count_;
}

UndirectedGraph UndirectedGraph::without(const VertexSet& s) const {
    UndirectedGraph g = *this;
    for (int v : s) {
        if (!g.live(v))
            throw precondition_error("without: vertex not live");
        for (int u : g.adj_[v]) {
            auto& a = g.adj_[u];
            a.erase(std::lower_bound(a.begin(), a.end(), v));
            --g.edge_count_;
        }
        g.adj_[v].clear();
        g.live_[v] = 0;
        --g.live_count_;
    }
    return g;
}

UndirectedGraph UndirectedGraph::induced(const VertexSet& s) const {
    return without(vertex_set().set_minus(s));
}

std::vector<VertexSet> UndirectedGraph::connected_components() const {
    std::vector<VertexSet> comps;
    std::vector<char> seen(id_bound(), 0);
    std::vector<int> stack, comp;
    for (int v = 0; v < id_bound(); ++v) {
        if (!live_[v] || seen[v]) continue;
        comp.clear();
        stack.push_back(v);
        seen[v] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int w : adj_[u])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        comps.emplace_back(comp);
    }
    return comps;
}

void DirectedGraph::add_arc(int u, int v) {
    if (!live(u) || !live(v))
        throw precondition_error("add_arc: endpoint not a live vertex");
    if (u == v)
        throw precondition_error("add_arc: self-loop");
    if (has_arc(u, v)) return;
    out_[u].insert(std::lower_bound(out_[u].begin(), out_[u].end(), v), v);
    in_[v].insert(std::lower_bound(in_[v].begin(), in_[v].end(), u), u);
    ++arc_count_;
}

std::vector<std::pair<int, int>> DirectedGraph::arcs() const {
    std::vector<std::pair<int, int>> a;
    a.reserve(arc_count_);
    for (int v = 0; v < id_bound(); ++v)
        if (live_[v])
            for (int u : out_[v]) a.emplace_back(v, u);
    return a;
}

DirectedGraph DirectedGraph::without(const VertexSet& s) const {
    DirectedGraph g = *this;
    for (int v : s) {
        if (!g.live(v))
            throw precondition_error("without: vertex not live");
        for (int u : g.out_[v]) {
            auto& a = g.in_[u];
            a.erase(std::lower_bound(a.begin(), a.end(), v));
            --g.arc_count_;
        }
        for (int u : g.in_[v]) {
            auto& a = g.out_[u];
            a.erase(std::lower_bound(a.begin(), a.end(), v));
            --g.arc_count_;
        }
        g.out_[v].clear();
        g.in_[v].clear();
        g.live_[v] = 0;
        --g.live_count_;
    }
    return g;
}

VertexSet open_neighborhood(const UndirectedGraph& g, const VertexSet& s) {
    std::vector<int> out;
    for (int v : s)
        for (int u : g.neighbors(v))
            if (!s.contains(u)) out.push_back(u);
    return VertexSet(std::move(out));
}

bool is_vertex_cover(const UndirectedGraph& g, const VertexSet& x) {
    for (int v : g.vertices()) {
        if (x.contains(v)) continue;
        for (int u : g.neighbors(v))
            if (u > v && !x.contains(u)) return false;
    }
    return true;
}

} // namespace vck
