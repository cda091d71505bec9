#include "gallai/claw_finders.hpp"

#include <algorithm>

#include "gallai/oracle.hpp"
#include "gallai/pattern.hpp"

namespace gallai {

namespace {

void check_entry(const Graph& g, ClassLabel label, bool skip_membership) {
  if (!is_connected(g))
    raise(Errc::disconnected, "finder needs a connected graph");
  if (!skip_membership && !in_class(g, label))
    raise(Errc::not_in_class,
          "graph is outside class " + std::string(class_name(label)));
}

}  // namespace

std::optional<std::tuple<int, int, int>> cut_triangle(const Graph& g) {
  VertexSet cuts = cut_vertices(g);
  for (size_t a = 0; a < cuts.size(); ++a)
    for (size_t b = a + 1; b < cuts.size(); ++b) {
      if (!g.adjacent(cuts[a], cuts[b])) continue;
      for (size_t c = b + 1; c < cuts.size(); ++c)
        if (g.adjacent(cuts[a], cuts[c]) && g.adjacent(cuts[b], cuts[c]))
          return std::tuple{cuts[a], cuts[b], cuts[c]};
    }
  return std::nullopt;
}

GallaiResult find_gallai_claw_p3_2p1(const Graph& g, bool skip_membership) {
  check_entry(g, ClassLabel::claw_p3_2p1, skip_membership);
  static const Pattern kP3P1 = named_pattern("P3+P1");
  if (auto map = find_induced(g, kP3P1))
    return {(*map)[1], Branch::p3p1_middle,
            EmbeddingCert{kP3P1.name, *map}};
  // P3+P1-free on top of claw-free: every vertex of degree >= max - 1 is
  // on all longest paths, so the top-degree vertex certainly is.
  return {lowest_max_degree_vertex(g), Branch::near_max_degree_fallback,
          NearMaxDegreeCert{}};
}

GallaiResult find_gallai_claw_k3_2p1(const Graph& g, bool skip_membership) {
  check_entry(g, ClassLabel::claw_k3_2p1, skip_membership);
  static const Pattern kK3P1 = named_pattern("K3+P1");
  static const Pattern kTriangle = named_pattern("triangle");
  if (auto map = find_induced(g, kK3P1)) {
    int vertex = std::min({(*map)[0], (*map)[1], (*map)[2]});
    return {vertex, Branch::triangle_dominating,
            EmbeddingCert{kK3P1.name, *map}};
  }
  if (is_free(g, kTriangle)) {
    // Claw-free and triangle-free forces max degree 2: a path or a cycle,
    // where every vertex lies on every longest path.
    return {0, Branch::path_or_cycle, MaxDegreeCert{}};
  }
  // Triangle present but K3+P1 absent: no constructive rule available, so
  // answer exactly, on small inputs only.
  if (g.vertex_count() > kOracleFallbackMax)
    raise(Errc::unsupported_size,
          "exact fallback accepts up to " +
              std::to_string(kOracleFallbackMax) + " vertices, got " +
              std::to_string(g.vertex_count()));
  VertexSet gallai = gallai_vertices_by_deletion(g);
  if (gallai.empty())
    raise(Errc::structure_violation,
          "empty Gallai set in the exact fallback; the input cannot be in "
          "class");
  return {gallai.front(), Branch::oracle_fallback, OracleFallbackCert{}};
}

GallaiResult find_gallai_claw_2p2_p1(const Graph& g, bool skip_membership) {
  check_entry(g, ClassLabel::claw_2p2_p1, skip_membership);
  static const Pattern k2P2 = named_pattern("2P2");
  if (auto map = find_induced(g, k2P2))
    return {heavier_endpoint(g, (*map)[0], (*map)[1]),
            Branch::high_degree_edge_end, EmbeddingCert{k2P2.name, *map}};
  return {lowest_max_degree_vertex(g), Branch::max_degree_fallback,
          MaxDegreeCert{}};
}

GallaiResult find_gallai_claw_p2_3p1(const Graph& g, bool skip_membership) {
  check_entry(g, ClassLabel::claw_p2_3p1, skip_membership);
  if (auto triple = cut_triangle(g)) {
    auto [x, y, z] = *triple;
    return {x, Branch::cut_triangle, CutTriangleCert{x, y, z}};
  }
  static const Pattern kP2_2P1 = named_pattern("P2+2P1");
  if (auto map = find_induced(g, kP2_2P1))
    return {heavier_endpoint(g, (*map)[0], (*map)[1]),
            Branch::dominating_p2p1, EmbeddingCert{kP2_2P1.name, *map}};
  return {lowest_max_degree_vertex(g), Branch::max_degree_fallback,
          MaxDegreeCert{}};
}

}  // namespace gallai
