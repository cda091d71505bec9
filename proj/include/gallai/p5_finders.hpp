#pragma once

#include <array>
#include <optional>

#include "gallai/certificates.hpp"
#include "gallai/graph.hpp"

namespace gallai {

// Partition into five non-empty stable sets, each complete to its two
// ring neighbors and anticomplete to the two others; absent if g is not
// such a blow-up of C5. S1 holds vertex 0 and S2 is its neighbor class
// with the smaller minimum.
std::optional<std::array<VertexSet, 5>> five_ring_partition(const Graph& g);

// Lowest dominating vertex if one exists, else the least dominating edge,
// else absent.
std::optional<VertexSet> dominating_clique_le2(const Graph& g);

// Decomposition of a connected (P5,C5,diamond)-free graph: a dominating
// clique with pendant clique components (G1), two cliques joined by a
// matching (G2), or a dominating edge with stripped clique components over
// a 2P2-free bipartite core (G3). Tried in that order; the first valid
// certificate wins. Throws PreconditionC5 when the input is not in the
// stated class, StructureViolation if nothing matches (which the
// underlying decomposition result rules out).
StructureCertificate classify_g123(const Graph& g);

// Lowest-id vertex x such that some component of g - x lies entirely in
// N(x) and every vertex is within distance two of x.
std::optional<int> find_g11_apex(const Graph& g);

GallaiResult find_gallai_p5_triangle(const Graph& g,
                                     bool skip_membership = false);
GallaiResult find_gallai_p5_paw(const Graph& g,
                                bool skip_membership = false);
GallaiResult find_gallai_p5_diamond(const Graph& g,
                                    bool skip_membership = false);

// Dispatch by label across all seven finders.
GallaiResult find_gallai(const Graph& g, ClassLabel label,
                         bool skip_membership = false);

}  // namespace gallai
