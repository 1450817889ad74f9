#pragma once

#include <vector>

#include "vck/decomposition.hpp"
#include "vck/graph.hpp"
#include "vck/repset.hpp"

namespace vck {

// Exhaustive ground truth for desk-scale verification.  Every routine here
// refuses inputs above its cap instead of silently degrading.

struct OracleReport {
    int min_size = 0;
    std::vector<VertexSet> witnesses; // all minimum covers when collect_all
};

// Exact minimum vertex cover by exhaustive per-component enumeration.
OracleReport min_vc_bruteforce(const UndirectedGraph& g, int cap = 20,
                               bool collect_all = false);

// All minimum vertex covers that additionally minimize the overlap with D.
std::vector<VertexSet> dominant_vcs(const UndirectedGraph& g, const NiceDecomposition& dec,
                                    int cap = 20);

// Same yes/no answer for (g,k) and (g2,k2)?
bool check_equivalence(const UndirectedGraph& g, long long k, const UndirectedGraph& g2,
                       long long k2, int cap = 20);

// Replays the reachability guarantee behind a representative family: for
// every closest deletion set of size <= ell, if some family member survives
// fully reachable then some selected member does too.
bool repset_bruteforce_check(const DirectedGraph& h, const VertexSet& s_h, int ell,
                             const TripleFamily& family, const TripleFamily& t_star);

} // namespace vck
