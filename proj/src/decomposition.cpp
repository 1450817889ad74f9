#include "vck/decomposition.hpp"

#include <string>

#include "vck/tight_cover.hpp"

namespace vck {

LpResult lp_value(const UndirectedGraph& g) {
    auto vs = g.vertices();
    int n = (int)vs.size();
    std::vector<int> rank(g.id_bound(), -1);
    for (int i = 0; i < n; ++i) rank[vs[i]] = i;

    // Bipartite double cover: edge {u,v} turns into u_L v_R and v_L u_R.
    // Its maximum matching size equals 2*LP(g), and a minimum vertex cover
    // of it reads off an optimal half-integral solution.
    BipartiteGraph bg;
    bg.n_left = bg.n_right = n;
    bg.adj.resize(n);
    for (int v : vs)
        for (int u : g.neighbors(v)) bg.adj[rank[v]].push_back(rank[u]);

    auto bm = hopcroft_karp(bg);
    auto cover = konig_cover(bg, bm);

    LpResult res;
    res.cover.half_units.assign(g.id_bound(), -1);
    for (int v : vs)
        res.cover.half_units[v] = (int8_t)(cover.left[rank[v]] + cover.right[rank[v]]);
    long long total = 0;
    for (int v : vs) total += res.cover.half_units[v];
    if (total != bm.size)
        throw internal_error("lp_value: cover weight does not match matching size");
    for (int v : vs)
        for (int u : g.neighbors(v))
            if (u > v && res.cover.half_units[v] + res.cover.half_units[u] < 2)
                throw internal_error("lp_value: extracted solution infeasible");
    res.cover.cost_half_units = total;
    res.cost_half_units = total;
    return res;
}

NtResult nt_reduce(const UndirectedGraph& g, long long k) {
    NtResult res;
    res.graph = g;
    for (;;) {
        auto lp = lp_value(res.graph);
        std::vector<int> zeros, ones;
        for (int v : res.graph.vertices()) {
            int x = lp.cover.half_units[v];
            if (x == 0) zeros.push_back(v);
            else if (x == 2) ones.push_back(v);
        }
        if (zeros.empty() && ones.empty()) break;
        VertexSet v0{std::vector<int>(zeros)}, v1{std::vector<int>(ones)};
        res.forced_in = res.forced_in.set_union(v1);
        res.removed_out = res.removed_out.set_union(v0);
        res.graph = res.graph.without(v0.set_union(v1));
    }
    res.k = k - res.forced_in.size();
    return res;
}

GePartition gallai_edmonds(const UndirectedGraph& g) {
    GePartition part;
    auto m = maximum_matching(g);
    for (int v : g.vertices()) {
        if (!m.covers(v)) {
            part.d.insert(v);
            continue;
        }
        // v is avoidable iff dropping it costs nothing: reseed the matching
        // without v's edge and look for a single augmenting path.
        Matching seed = m;
        seed.remove(v, m.mate(v));
        auto m2 = augment_to_maximum(g.without(VertexSet{v}), seed);
        if (m2.size() == m.size()) part.d.insert(v);
    }
    part.a = open_neighborhood(g, part.d);
    part.b = g.vertex_set().set_minus(part.d).set_minus(part.a);
    return part;
}

ComponentClasses classify_components(const UndirectedGraph& g, const VertexSet& a,
                                     const VertexSet& d, const Matching& m) {
    ComponentClasses cl;
    auto comps = g.induced(d).connected_components();
    std::vector<int> comp_of(g.id_bound(), -1);
    for (size_t i = 0; i < comps.size(); ++i)
        for (int v : comps[i]) comp_of[v] = (int)i;

    std::vector<char> matched(comps.size(), 0);
    for (size_t i = 0; i < comps.size(); ++i)
        for (int v : comps[i])
            if (m.covers(v) && a.contains(m.mate(v))) matched[i] = 1;

    for (size_t i = 0; i < comps.size(); ++i) {
        bool singleton = comps[i].size() == 1;
        if (singleton && matched[i]) cl.matched_singletons.push_back(comps[i]);
        else if (singleton) cl.unmatched_singletons.push_back(comps[i]);
        else if (matched[i]) cl.matched_nonsingletons.push_back(comps[i]);
        else cl.unmatched_nonsingletons.push_back(comps[i]);
    }
    for (int v : a) {
        if (!m.covers(v)) continue;
        int w = m.mate(v);
        if (!d.contains(w)) continue;
        if (comps[comp_of[w]].size() == 1) cl.a_to_singleton.insert(v);
        else cl.a_to_nonsingleton.insert(v);
    }
    return cl;
}

NiceDecomposition nice_decomposition(const UndirectedGraph& g) {
    NiceDecomposition dec;
    auto part = gallai_edmonds(g);
    dec.a = part.a;
    dec.b = part.b;
    dec.d = part.d;

    // Singleton components of G[D] have all their neighbors in A; match each
    // one into A first, then only augment, so all of them stay covered.
    std::vector<int> singles;
    for (int v : dec.d) {
        bool isolated_in_d = true;
        for (int u : g.neighbors(v))
            if (dec.d.contains(u)) {
                isolated_in_d = false;
                break;
            }
        if (isolated_in_d) singles.push_back(v);
    }
    auto hall = hall_match_singletons(g, VertexSet(std::move(singles)));
    if (!hall.saturated) throw hall_violation(hall.violating);
    dec.m = augment_to_maximum(g, hall.matching);
    dec.classes = classify_components(g, dec.a, dec.d, dec.m);
    if (!dec.classes.unmatched_singletons.empty())
        throw internal_error("nice_decomposition: a matched singleton became exposed");
    return dec;
}

long long vc_lower_bound(const NiceDecomposition& dec) {
    return (long long)dec.m.size() + (long long)dec.classes.unmatched_nonsingletons.size();
}

NiceDecomposition inherit_after_delete(const NiceDecomposition& dec, const VertexSet& c) {
    NiceDecomposition nd = dec;
    auto drop_from = [&](std::vector<VertexSet>& list) {
        for (auto it = list.begin(); it != list.end(); ++it)
            if (*it == c) {
                list.erase(it);
                return true;
            }
        return false;
    };
    if (!drop_from(nd.classes.unmatched_nonsingletons) &&
        !drop_from(nd.classes.unmatched_singletons))
        throw precondition_error("inherit_after_delete: c is not an unmatched component");
    nd.d = dec.d.set_minus(c);
    // unmatched components only carry internal matching edges
    for (auto [u, v] : dec.m.edges())
        if (c.contains(u) || c.contains(v)) nd.m.remove(u, v);
    return nd;
}

namespace {

void check(bool ok, const std::string& name) {
    if (!ok) throw internal_error("decomposition invariant violated: " + name);
}

} // namespace

void validate_decomposition(const UndirectedGraph& g, const NiceDecomposition& dec) {
    const auto& a = dec.a;
    const auto& b = dec.b;
    const auto& d = dec.d;
    const auto& m = dec.m;

    check(a.set_intersect(b).empty() && a.set_intersect(d).empty() &&
              b.set_intersect(d).empty(),
          "a/b/d pairwise disjoint");
    check(a.set_union(b).set_union(d) == g.vertex_set(), "a/b/d cover the graph");
    check(open_neighborhood(g, d) == a, "a equals the neighborhood of d");

    check(m.valid_for(g), "matching edges exist in g");
    check(m.size() == maximum_matching(g).size(), "matching is maximum");

    for (int v : b)
        check(m.covers(v) && b.contains(m.mate(v)), "b is perfectly matched inside b");
    for (int v : a)
        check(m.covers(v) && d.contains(m.mate(v)), "a is matched into d");

    auto comps = g.induced(d).connected_components();
    for (const auto& comp : comps) {
        check(comp.size() % 2 == 1, "d-components have odd order");
        auto cg = g.induced(comp);
        check(is_factor_critical(cg), "d-components are factor-critical");
        int inside = 0, outside = 0, exposed = 0;
        for (int v : comp) {
            if (!m.covers(v)) ++exposed;
            else if (comp.contains(m.mate(v))) ++inside;
            else ++outside;
        }
        check(inside == comp.size() - 1 && exposed + outside == 1,
              "d-components are near-perfectly matched");
    }

    auto fresh = classify_components(g, a, d, m);
    auto eq_lists = [](const std::vector<VertexSet>& x, const std::vector<VertexSet>& y) {
        return x == y;
    };
    check(eq_lists(fresh.matched_singletons, dec.classes.matched_singletons) &&
              eq_lists(fresh.unmatched_singletons, dec.classes.unmatched_singletons) &&
              eq_lists(fresh.matched_nonsingletons, dec.classes.matched_nonsingletons) &&
              eq_lists(fresh.unmatched_nonsingletons, dec.classes.unmatched_nonsingletons) &&
              fresh.a_to_singleton == dec.classes.a_to_singleton &&
              fresh.a_to_nonsingleton == dec.classes.a_to_nonsingleton,
          "component classes match a fresh classification");
    check(dec.classes.unmatched_singletons.empty(), "no unmatched singleton components");
}

} // namespace vck
