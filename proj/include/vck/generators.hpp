#pragma once

#include <cstdint>

#include "vck/graph.hpp"

namespace vck {

// t vertex-disjoint cycles of length 2s+1, vertices numbered consecutively.
UndirectedGraph odd_cycles(int t, int s);

// Erdos-Renyi G(n, p); identical (n, p, seed) gives an identical graph.
UndirectedGraph gnp(int n, double p, uint64_t seed);

// Odd cycle on n vertices plus `extra` distinct random chords.  Any graph
// containing a factor-critical spanning subgraph is factor-critical, so
// every output is.
UndirectedGraph factor_critical_chords(int n, int extra, uint64_t seed);

// Budget that makes the excess over the decomposition lower bound equal to
// ell, i.e. k = (2*LP - MM) + ell.
long long suggested_k(const UndirectedGraph& g, long long ell);

} // namespace vck
