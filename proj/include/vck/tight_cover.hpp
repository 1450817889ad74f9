#pragma once

#include <optional>
#include <vector>

#include "vck/graph.hpp"

namespace vck {

// G is factor-critical iff G - v has a perfect matching for every v.
bool is_factor_critical(const UndirectedGraph& g);

// Decision form: is there a vertex cover of size <= budget containing forced?
bool has_cover_with_forced(const UndirectedGraph& g, const VertexSet& forced,
                           long long budget);

// Witness form; decides vertices in ascending id order, taking each vertex
// whose inclusion still leaves an in-budget completion and stopping once the
// chosen set covers everything, so repeated runs produce identical snapshots.
std::optional<VertexSet> vc_with_forced(const UndirectedGraph& g, const VertexSet& forced,
                                        long long budget);

// A tight cover of an odd-order graph is one of size (|V|+1)/2, the minimum
// possible for a factor-critical graph.
bool has_tight_vc(const UndirectedGraph& g);

// Bad set: a vertex set no tight cover contains.  Returns the inclusion-
// minimal bad sets of size <= max_size, ordered by size then lexicographic.
// Exhaustive, so only for small graphs; [{}] means no tight cover exists.
std::vector<VertexSet> critical_sets(const UndirectedGraph& g, int max_size);

} // namespace vck
