#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "vck/graph.hpp"

namespace vck {

// DIMACS edge format: "p edge n m" header, "e u v" lines with 1-based ids,
// "c ..." comments.  A comment of the form "c k <int>" carries the cover
// budget alongside the graph.

struct DimacsInstance {
    UndirectedGraph graph;
    std::optional<long long> k;
};

UndirectedGraph parse_dimacs(std::istream& in);
UndirectedGraph parse_dimacs(const std::string& text);
DimacsInstance read_dimacs_instance(std::istream& in);
DimacsInstance read_dimacs_instance(const std::string& text);

// Serialize with live vertices renumbered 1..n in ascending id order and
// edges sorted; parse(serialize(g)) == g whenever g has no deleted ids.
std::string to_dimacs(const UndirectedGraph& g, std::optional<long long> k = std::nullopt);

// Snapshot form used by tests: one "v <id>" line per live vertex and one
// "e <u> <v>" line per edge (u < v), ids verbatim.
std::string canonical_text(const UndirectedGraph& g);

} // namespace vck
