#pragma once

#include <cstdint>
#include <vector>

#include "vck/errors.hpp"
#include "vck/graph.hpp"
#include "vck/matching.hpp"

namespace vck {

// Half-integral fractional vertex cover; values are stored in half units
// (0, 1, 2 per vertex) so all arithmetic stays integral.
struct FractionalCover {
    std::vector<int8_t> half_units; // indexed by vertex id, -1 for dead ids
    long long cost_half_units = 0;

    int value_half_units(int v) const { return half_units[v]; }
};

struct LpResult {
    long long cost_half_units = 0; // equals 2 * LP(g)
    FractionalCover cover;
};

// Optimal LP relaxation value of vertex cover, solved exactly through a
// maximum matching of the bipartite double cover; the returned solution is
// an optimal half-integral extreme point.
LpResult lp_value(const UndirectedGraph& g);

// LP-based preprocessing: repeatedly delete value-1 vertices into the cover
// and value-0 vertices outright until the computed optimum is all-half,
// which certifies 2*LP = |V| on the remainder.
struct NtResult {
    UndirectedGraph graph;
    long long k = 0;
    VertexSet forced_in;   // value-1 deletions, charged against k
    VertexSet removed_out; // value-0 deletions (isolated vertices end up here)
};
NtResult nt_reduce(const UndirectedGraph& g, long long k);

// D = vertices some maximum matching leaves uncovered, A = N(D), B = rest.
struct GePartition {
    VertexSet a, b, d;
};
GePartition gallai_edmonds(const UndirectedGraph& g);

struct ComponentClasses {
    VertexSet a_to_singleton;    // A-vertices matched into singleton components
    VertexSet a_to_nonsingleton; // A-vertices matched into larger components
    std::vector<VertexSet> matched_singletons;
    std::vector<VertexSet> unmatched_singletons;
    std::vector<VertexSet> matched_nonsingletons;
    std::vector<VertexSet> unmatched_nonsingletons;
};

// Partition of G plus a maximum matching chosen so that every singleton
// component of G[D] is matched (possible exactly when 2*LP = |V|).
struct NiceDecomposition {
    VertexSet a, b, d;
    Matching m;
    ComponentClasses classes;

    const std::vector<VertexSet>& unmatched_components() const {
        return classes.unmatched_nonsingletons;
    }
};

// Thrown when the singleton components cannot all be matched into A; the
// witness is a set of singletons with too small a neighborhood, which also
// certifies 2*LP < |V|.
struct hall_violation : std::runtime_error {
    VertexSet witness;
    explicit hall_violation(VertexSet w)
        : std::runtime_error("singleton components violate Hall's condition"),
          witness(std::move(w)) {}
};

NiceDecomposition nice_decomposition(const UndirectedGraph& g);

ComponentClasses classify_components(const UndirectedGraph& g, const VertexSet& a,
                                     const VertexSet& d, const Matching& m);

// |M| + number of unmatched non-singleton components; equals 2*LP - MM.
long long vc_lower_bound(const NiceDecomposition& dec);

// Decomposition of g - c obtained without recomputation when c is an
// unmatched component (singleton or not).
NiceDecomposition inherit_after_delete(const NiceDecomposition& dec, const VertexSet& c);

// Checks every structural requirement; throws internal_error naming the
// violated property.  Used by tests and the verification tool.
void validate_decomposition(const UndirectedGraph& g, const NiceDecomposition& dec);

} // namespace vck
