#pragma once

#include <cstdint>
#include <vector>

#include "gallai/graph.hpp"

namespace gallai {

// Canonical form for graphs on up to 11 vertices (55 adjacency bits packed
// into a uint64, bit j(j-1)/2+i for the pair i<j). Two graphs get the same
// code iff they are isomorphic, so the code doubles as a dedup key for the
// enumeration sweeps. Throws UnsupportedSize above 11 vertices.
uint64_t canonical_code(const Graph& g);

// Rebuild a graph from a code produced by canonical_code (or any packed
// upper triangle) on n vertices.
Graph graph_from_code(int n, uint64_t code);

// Exact isomorphism test via canonical codes; both graphs must have at
// most 11 vertices.
bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace gallai
