#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gallai/errors.hpp"

namespace gallai {

inline constexpr int kMaxVertices = 512;

// Sorted list of vertex ids. Every function in the library that returns a
// vertex set keeps it sorted ascending so output is deterministic.
using VertexSet = std::vector<int>;

// Immutable simple graph over vertices 0..n-1 with bitset adjacency rows.
// Row v occupies words() consecutive uint64 words; bit u of row v is set iff
// uv is an edge. Immutability keeps the adjacency safe to share across the
// recursive searches; use GraphBuilder to assemble one.
class Graph {
 public:
  Graph() : n_(0), w_(0) {}

  int vertex_count() const { return n_; }
  int edge_count() const;

  bool adjacent(int u, int v) const {
    return (bits_[static_cast<size_t>(u) * w_ + (v >> 6)] >>
            (v & 63)) & 1u;
  }

  int degree(int v) const;
  int max_degree() const;
  VertexSet neighbors(int v) const;

  // Number of uint64 words per adjacency row.
  int words() const { return w_; }
  std::span<const uint64_t> row(int v) const {
    return {bits_.data() + static_cast<size_t>(v) * w_,
            static_cast<size_t>(w_)};
  }

  bool operator==(const Graph& other) const = default;

 private:
  friend class GraphBuilder;
  int n_;
  int w_;
  std::vector<uint64_t> bits_;
};

// Adjacency view for graphs on at most 16 vertices, one uint16 row per
// vertex. The enumeration sweeps run their pattern checks against this to
// avoid rebuilding Graph objects at every augmentation step.
struct SmallView {
  int n;
  const uint16_t* rows;

  bool adjacent(int u, int v) const { return (rows[u] >> v) & 1u; }
  int degree(int v) const { return __builtin_popcount(rows[v]); }
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int n);

  // Throws self_loop / vertex_out_of_range / duplicate_edge.
  GraphBuilder& add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  int vertex_count() const { return n_; }

  Graph build() const;

 private:
  int n_;
  int w_;
  std::vector<uint64_t> bits_;
};

// graph6 codec for 0 <= n <= 62 (single size byte). parse_graph6 accepts an
// optional ">>graph6<<" prefix and rejects trailing bytes, short input and
// nonzero padding bits. to_graph6 emits the canonical bytes for the graph.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// Plain text edge list: first line "n m", then m lines "u v". Throws
// malformed_record on anything else (bad counts, junk tokens), and the
// builder errors pass through for self loops / duplicates / range.
Graph parse_edge_list(std::string_view text);

// Components as sorted vertex sets, ordered by their minimum vertex.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Components of the graph minus the vertices in `removed`, same ordering
// contract as connected_components.
std::vector<VertexSet> components_excluding(const Graph& g,
                                            const VertexSet& removed);

bool is_clique(const Graph& g, const VertexSet& s);

// Cut vertices (articulation points), sorted ascending.
VertexSet cut_vertices(const Graph& g);

// Selection rules shared by the finders and the certificate validator:
// the lowest vertex of maximum degree, and the endpoint of uv with the
// larger degree (lower id on ties).
int lowest_max_degree_vertex(const Graph& g);
int heavier_endpoint(const Graph& g, int u, int v);

bool is_dominating(const Graph& g, const VertexSet& s);

// Two-coloring via BFS, color 0 on the lowest vertex of each component.
// nullopt if some component is odd-cyclic.
std::optional<std::vector<int>> is_bipartite(const Graph& g);

// Partition into independent parts with every cross-part pair adjacent.
// Such a partition exists iff every component of the complement is a
// clique there; the parts are those components, ordered by minimum vertex.
// nullopt if the graph is not complete multipartite; n = 0 gives an empty
// part list.
std::optional<std::vector<VertexSet>> complete_multipartite_parts(
    const Graph& g);

Graph induced_subgraph(const Graph& g, const VertexSet& keep);
Graph complement(const Graph& g);

// perm[i] = new id of old vertex i; perm must be a permutation of 0..n-1.
Graph relabel(const Graph& g, const std::vector<int>& perm);

}  // namespace gallai
