#include "vck/tight_cover.hpp"

#include <cstdint>
#include <unordered_set>

#include "vck/decomposition.hpp"
#include "vck/errors.hpp"
#include "vck/matching.hpp"

namespace vck {

bool is_factor_critical(const UndirectedGraph& g) {
    int n = g.vertex_count();
    if (n % 2 == 0) return false;
    for (int v : g.vertices()) {
        auto m = maximum_matching(g.without(VertexSet{v}));
        if (2 * m.size() != n - 1) return false;
    }
    return true;
}

namespace {

// Exact branch and bound on the remaining graph.  Branching on a maximum
// degree vertex; pruning with the exact LP bound, which is what makes the
// near-tight budgets from factor-critical components cheap.
bool cover_decision(const UndirectedGraph& g, long long budget) {
    if (budget < 0) return false;
    if (g.edge_count() == 0) return true;
    long long lp2 = lp_value(g).cost_half_units; // 2*LP
    if ((lp2 + 1) / 2 > budget) return false;
    int pick = -1, deg = -1;
    for (int v : g.vertices())
        if (g.degree(v) > deg) {
            deg = g.degree(v);
            pick = v;
        }
    if (cover_decision(g.without(VertexSet{pick}), budget - 1)) return true;
    // pick stays outside: every neighbor goes in
    VertexSet block(g.neighbors(pick));
    long long cost = block.size();
    block.insert(pick);
    return cover_decision(g.without(block), budget - cost);
}

// Feasibility with explicit in/out commitments.  Excluded vertices push all
// their neighbors into the cover first.
bool committed_feasible(const UndirectedGraph& g, const VertexSet& in, const VertexSet& out,
                        long long budget) {
    VertexSet must = in;
    for (int v : out)
        for (int u : g.neighbors(v)) {
            if (out.contains(u)) return false; // an edge with both ends excluded
            must.insert(u);
        }
    if (!must.set_intersect(out).empty()) return false;
    if ((long long)must.size() > budget) return false;
    return cover_decision(g.without(must.set_union(out)), budget - must.size());
}

} // namespace

bool has_cover_with_forced(const UndirectedGraph& g, const VertexSet& forced,
                           long long budget) {
    for (int v : forced)
        if (!g.live(v)) throw precondition_error("has_cover_with_forced: dead forced vertex");
    return committed_feasible(g, forced, VertexSet{}, budget);
}

std::optional<VertexSet> vc_with_forced(const UndirectedGraph& g, const VertexSet& forced,
                                        long long budget) {
    for (int v : forced)
        if (!g.live(v)) throw precondition_error("vc_with_forced: dead forced vertex");
    if (!committed_feasible(g, forced, VertexSet{}, budget)) return std::nullopt;
    // Fix vertices in ascending id order, preferring membership whenever some
    // in-budget cover extends the choice; stop as soon as the committed set
    // already covers everything (prefixes order before extensions).
    VertexSet in = forced, out;
    for (int v : g.vertices()) {
        if (in.contains(v)) continue;
        if (is_vertex_cover(g, in)) break;
        if (committed_feasible(g, in.set_union(VertexSet{v}), out, budget))
            in.insert(v);
        else
            out.insert(v);
    }
    return in;
}

bool has_tight_vc(const UndirectedGraph& g) {
    if (g.vertex_count() % 2 == 0)
        throw precondition_error("has_tight_vc: graph order must be odd");
    return has_cover_with_forced(g, VertexSet{}, (g.vertex_count() + 1) / 2);
}

std::vector<VertexSet> critical_sets(const UndirectedGraph& g, int max_size) {
    int n = g.vertex_count();
    if (n % 2 == 0)
        throw precondition_error("critical_sets: graph order must be odd");
    if (n > 22)
        throw oracle_cap_error("critical_sets: exhaustive search capped at 22 vertices");

    auto vs = g.vertices();
    std::vector<int> rank(g.id_bound(), -1);
    for (int i = 0; i < n; ++i) rank[vs[i]] = i;
    std::vector<uint32_t> nbr(n, 0);
    for (int i = 0; i < n; ++i)
        for (int u : g.neighbors(vs[i])) nbr[i] |= 1u << rank[u];

    int tight = (n + 1) / 2;
    std::vector<uint32_t> covers;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != tight) continue;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            if (!(mask >> i & 1) && (nbr[i] & ~mask)) ok = false;
        if (ok) covers.push_back(mask);
    }
    if (covers.empty()) return {VertexSet{}}; // everything is bad, only {} is minimal

    auto is_bad = [&](uint32_t z) {
        for (uint32_t c : covers)
            if ((z & ~c) == 0) return false;
        return true;
    };

    std::vector<VertexSet> result;
    std::unordered_set<uint32_t> bad_prev, bad_cur;
    std::vector<int> idx;
    for (int size = 1; size <= max_size; ++size) {
        bad_cur.clear();
        idx.assign(size, 0);
        for (int i = 0; i < size; ++i) idx[i] = i;
        while (idx[0] <= n - size) {
            uint32_t z = 0;
            for (int i : idx) z |= 1u << i;
            if (is_bad(z)) {
                bad_cur.insert(z);
                bool minimal = true;
                for (int i : idx)
                    if (bad_prev.count(z & ~(1u << i))) {
                        minimal = false;
                        break;
                    }
                if (minimal) {
                    std::vector<int> ids;
                    for (int i : idx) ids.push_back(vs[i]);
                    result.emplace_back(std::move(ids));
                }
            }
            // next combination in lexicographic order
            int j = size - 1;
            while (j >= 0 && idx[j] == n - size + j) --j;
            if (j < 0) break;
            ++idx[j];
            for (int t = j + 1; t < size; ++t) idx[t] = idx[t - 1] + 1;
        }
        std::swap(bad_prev, bad_cur);
    }
    return result;
}

} // namespace vck
