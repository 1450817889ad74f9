#include "vck/oracle.hpp"

#include <cstdint>

#include "vck/digraph_aux.hpp"
#include "vck/errors.hpp"

namespace vck {

namespace {

struct ComponentCovers {
    int min_size = 0;
    std::vector<uint32_t> min_masks; // over component-local indices
};

ComponentCovers component_min_covers(const UndirectedGraph& g, const VertexSet& comp,
                                     bool collect) {
    int n = comp.size();
    if (n > 30) throw oracle_cap_error("min_vc_bruteforce: component too large to enumerate");
    std::vector<int> ids(comp.begin(), comp.end());
    std::vector<uint32_t> nbr(n, 0);
    for (int i = 0; i < n; ++i)
        for (int u : g.neighbors(ids[i])) {
            int j = (int)(std::lower_bound(ids.begin(), ids.end(), u) - ids.begin());
            nbr[i] |= 1u << j;
        }
    ComponentCovers out;
    out.min_size = n + 1;
    for (uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        int pc = __builtin_popcountll(mask);
        if (pc > out.min_size) continue;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            if (!(mask >> i & 1) && (nbr[i] & ~(uint32_t)mask)) ok = false;
        if (!ok) continue;
        if (pc < out.min_size) {
            out.min_size = pc;
            out.min_masks.clear();
        }
        if (collect || out.min_masks.empty()) {
            if (pc == out.min_size) out.min_masks.push_back((uint32_t)mask);
        }
    }
    return out;
}

} // namespace

OracleReport min_vc_bruteforce(const UndirectedGraph& g, int cap, bool collect_all) {
    if (g.vertex_count() > cap)
        throw oracle_cap_error("min_vc_bruteforce: graph exceeds cap of " +
                               std::to_string(cap) + " vertices");
    OracleReport report;
    std::vector<std::vector<VertexSet>> per_comp;
    for (const auto& comp : g.connected_components()) {
        auto cc = component_min_covers(g, comp, collect_all);
        report.min_size += cc.min_size;
        std::vector<int> ids(comp.begin(), comp.end());
        std::vector<VertexSet> covers;
        for (uint32_t mask : cc.min_masks) {
            std::vector<int> vs;
            for (int i = 0; i < (int)ids.size(); ++i)
                if (mask >> i & 1) vs.push_back(ids[i]);
            covers.emplace_back(std::move(vs));
        }
        per_comp.push_back(std::move(covers));
    }
    // combine: minimum covers of a disjoint union are exactly the unions of
    // per-component minimum covers
    std::vector<VertexSet> acc{VertexSet{}};
    for (const auto& covers : per_comp) {
        std::vector<VertexSet> next;
        if (acc.size() * covers.size() > 1000000)
            throw oracle_cap_error("min_vc_bruteforce: too many minimum covers to list");
        for (const auto& base : acc)
            for (const auto& c : covers) next.push_back(base.set_union(c));
        acc = std::move(next);
    }
    if (collect_all)
        report.witnesses = std::move(acc);
    else if (!acc.empty())
        report.witnesses = {acc.front()};
    return report;
}

std::vector<VertexSet> dominant_vcs(const UndirectedGraph& g, const NiceDecomposition& dec,
                                    int cap) {
    auto report = min_vc_bruteforce(g, cap, true);
    int best = g.vertex_count() + 1;
    for (const auto& x : report.witnesses)
        best = std::min(best, x.set_intersect(dec.d).size());
    std::vector<VertexSet> out;
    for (const auto& x : report.witnesses)
        if (x.set_intersect(dec.d).size() == best) out.push_back(x);
    return out;
}

bool check_equivalence(const UndirectedGraph& g, long long k, const UndirectedGraph& g2,
                       long long k2, int cap) {
    bool yes1 = min_vc_bruteforce(g, cap).min_size <= k;
    bool yes2 = min_vc_bruteforce(g2, cap).min_size <= k2;
    return yes1 == yes2;
}

bool repset_bruteforce_check(const DirectedGraph& h, const VertexSet& s_h, int ell,
                             const TripleFamily& family, const TripleFamily& t_star) {
    auto vs = h.vertices();
    int n = (int)vs.size();
    if (n > 20) throw oracle_cap_error("repset_bruteforce_check: digraph too large");
    for (const auto& t : t_star.sets) {
        bool found = false;
        for (const auto& f : family.sets)
            if (f == t) {
                found = true;
                break;
            }
        if (!found) return false; // selection must be a subfamily
    }
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) > ell) continue;
        std::vector<int> xs;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) xs.push_back(vs[i]);
        VertexSet x(std::move(xs));
        if (!is_closest(h, s_h, x)) continue;
        auto reach = reachable_set(h, s_h, x);
        bool family_hit = false;
        for (const auto& t : family.sets)
            if (t.is_subset_of(reach)) {
                family_hit = true;
                break;
            }
        if (!family_hit) continue;
        bool star_hit = false;
        for (const auto& t : t_star.sets)
            if (t.is_subset_of(reach)) {
                star_hit = true;
                break;
            }
        if (!star_hit) return false;
    }
    return true;
}

} // namespace vck
