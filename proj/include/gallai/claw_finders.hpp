#pragma once

#include <optional>
#include <tuple>

#include "gallai/certificates.hpp"
#include "gallai/graph.hpp"

namespace gallai {

// Least triple (x < y < z) of pairwise adjacent cut vertices, if any.
// Such a triangle is on every longest path.
std::optional<std::tuple<int, int, int>> cut_triangle(const Graph& g);

// The oracle fallback of the (claw, K3+2P1) finder refuses larger inputs:
// it enumerates longest paths exactly.
inline constexpr int kOracleFallbackMax = 24;

// Each finder returns a vertex on every longest path of g, with the proof
// case and its witness. They check connectivity always and class
// membership unless skip_membership is set (for pre-filtered batches).
GallaiResult find_gallai_claw_p3_2p1(const Graph& g,
                                     bool skip_membership = false);
GallaiResult find_gallai_claw_k3_2p1(const Graph& g,
                                     bool skip_membership = false);
GallaiResult find_gallai_claw_2p2_p1(const Graph& g,
                                     bool skip_membership = false);
GallaiResult find_gallai_claw_p2_3p1(const Graph& g,
                                     bool skip_membership = false);

}  // namespace gallai
