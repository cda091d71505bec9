#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "gallai/graph.hpp"

namespace gallai {

// Paths are undirected: a sequence and its reversal are the same path, and
// every function here reports the canonical orientation (smaller endpoint
// first).
struct Path {
  std::vector<int> vertices;
  bool operator==(const Path&) const = default;
};

struct LongestPathReport {
  int length = 0;            // vertex count of a longest path
  uint64_t path_count = 0;   // longest paths enumerated (canonical)
  std::vector<Path> paths;   // first kDefaultPathRetention of them
  VertexSet gallai_set;      // intersection of enumerated longest paths
  bool truncated = false;    // some longest path was not enumerated
};

// Enumeration stops after this many longest paths and reports truncated;
// the intersection is then an over-approximation, never an error.
inline constexpr uint64_t kDefaultPathBudget = 10'000'000;
// Independent cap on how many paths the report keeps for display.
inline constexpr uint64_t kDefaultPathRetention = 10'000;

// Exact longest path order via branch-and-bound (prune when the prefix
// plus everything still reachable from the tip cannot beat the incumbent).
// Works on disconnected graphs too: the maximum over components. n = 0
// gives 0.
int longest_path_length(const Graph& g);

struct EnumerationStats {
  int length = 0;
  uint64_t path_count = 0;
  bool truncated = false;
};

// Calls visit for every longest path, canonical orientation, in
// lexicographic order of the vertex sequence, up to path_budget of them.
EnumerationStats enumerate_longest_paths(
    const Graph& g, uint64_t path_budget,
    const std::function<void(const std::vector<int>&)>& visit);

LongestPathReport longest_path_report(
    const Graph& g, uint64_t path_budget = kDefaultPathBudget,
    uint64_t retention = kDefaultPathRetention);

// Vertices on every longest path. Throws Disconnected: the question is
// posed for connected graphs only.
VertexSet gallai_vertices(const Graph& g);

// Same set by the deletion route: v lies on every longest path iff
// removing v makes the longest path shorter (the longest paths of g - v
// are exactly the longest paths of g avoiding v). Cheaper than full
// enumeration on dense graphs; the two routes must agree.
VertexSet gallai_vertices_by_deletion(const Graph& g);
bool is_gallai_vertex(const Graph& g, int v);

// Order-0 and order-1 graphs count as having a Hamiltonian path; only the
// order-1 graph gets the trivial Hamiltonian cycle.
bool has_hamiltonian_path(const Graph& g);
bool has_hamiltonian_cycle(const Graph& g);

// Smallest vertex set of size <= k_max meeting every longest path,
// lexicographically first among minimum ones; nullopt if every such set
// is larger than k_max. Throws Disconnected.
std::optional<VertexSet> min_transversal(const Graph& g, int k_max);

}  // namespace gallai
