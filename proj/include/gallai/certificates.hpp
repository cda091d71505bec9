#pragma once

#include <array>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gallai/graph.hpp"
#include "gallai/pattern.hpp"

namespace gallai {

// Proof case a finder used. The tag names the argument from the underlying
// theorem; validate_certificate re-checks the structural facts that make
// the case apply.
enum class Branch {
  p3p1_middle,
  near_max_degree_fallback,
  triangle_dominating,
  path_or_cycle,
  oracle_fallback,
  high_degree_edge_end,
  max_degree_fallback,
  cut_triangle,
  dominating_p2p1,
  five_ring_max_degree,
  dominating_vertex,
  dominating_edge_end,
  multipartite_max_degree,
  g1_star_like,
  g2_traceable,
  g3_edge_end,
  expansion_max_degree,
  g11_apex,
};

const char* branch_name(Branch branch);

// An induced copy of `pattern` at `map` (construction-order images).
struct EmbeddingCert {
  std::string pattern;
  std::vector<int> map;
};

struct DominatingSetCert {
  VertexSet set;
};

// Three pairwise adjacent cut vertices, x < y < z.
struct CutTriangleCert {
  int x, y, z;
};

// Marker certificates: the branch's whole story is the absence of some
// pattern plus a degree rule, both re-checked by the validator.
struct MaxDegreeCert {};
struct NearMaxDegreeCert {};
struct OracleFallbackCert {};

// Partition into five stable sets, each complete to its ring neighbors
// and anticomplete to the rest.
struct FiveRingCert {
  std::array<VertexSet, 5> rings;
};

struct DominatingCliqueCert {
  VertexSet set;  // one or two vertices
};

// Dominating clique plus pendant clique components, each hanging off a
// single clique vertex.
struct G1Cert {
  struct Component {
    VertexSet vertices;
    int attach;
  };
  VertexSet clique;
  std::vector<Component> components;
};

// Two cliques whose cross edges form a non-empty matching.
struct G2Cert {
  VertexSet x_side, y_side;
  std::vector<std::pair<int, int>> matching;
};

enum class G3Attach { x, y, both };

// Dominating edge xy, stripped clique components each complete to x or y
// (at most one to both), and the 2P2-free bipartite remainder on
// h_vertices.
struct G3Cert {
  struct Component {
    VertexSet vertices;
    G3Attach attach;
  };
  VertexSet h_vertices;
  int x, y;
  std::vector<Component> components;
};

// Vertex x whose deleted graph has components inside N(x) (their union is
// c) and which reaches everything within two steps.
struct ApexCert {
  int x;
  VertexSet c;
};

using StructureCertificate =
    std::variant<EmbeddingCert, DominatingSetCert, CutTriangleCert,
                 MaxDegreeCert, NearMaxDegreeCert, OracleFallbackCert,
                 FiveRingCert, DominatingCliqueCert, G1Cert, G2Cert, G3Cert,
                 ApexCert>;

struct GallaiResult {
  int vertex;
  Branch branch;
  StructureCertificate witness;
};

// Re-checks that the branch was allowed to fire on g (trigger patterns
// present or absent as the branch demands), that the witness's structural
// claims hold, and that the vertex follows the branch's selection rule.
// The class label disambiguates branches shared between finders.
bool validate_certificate(const Graph& g, const GallaiResult& result,
                          ClassLabel label);

// Deterministic JSON: object keys are emitted in alphabetical order.
std::string certificate_json(const StructureCertificate& cert);

}  // namespace gallai
