#include "gallai/certificates.hpp"

#include <algorithm>
#include <variant>

#include <json.hpp>

#include "gallai/claw_finders.hpp"
#include "gallai/oracle.hpp"
#include "gallai/p5_finders.hpp"

namespace gallai {

const char* branch_name(Branch branch) {
  switch (branch) {
    case Branch::p3p1_middle: return "P3P1-middle";
    case Branch::near_max_degree_fallback: return "NearMaxDegreeFallback";
    case Branch::triangle_dominating: return "TriangleDominating";
    case Branch::path_or_cycle: return "PathOrCycle";
    case Branch::oracle_fallback: return "OracleFallback";
    case Branch::high_degree_edge_end: return "HighDegreeEdgeEnd";
    case Branch::max_degree_fallback: return "MaxDegreeFallback";
    case Branch::cut_triangle: return "CutTriangle";
    case Branch::dominating_p2p1: return "DominatingP2P1";
    case Branch::five_ring_max_degree: return "FiveRingMaxDegree";
    case Branch::dominating_vertex: return "DominatingVertex";
    case Branch::dominating_edge_end: return "DominatingEdgeEnd";
    case Branch::multipartite_max_degree: return "MultipartiteMaxDegree";
    case Branch::g1_star_like: return "G1StarLike";
    case Branch::g2_traceable: return "G2Traceable";
    case Branch::g3_edge_end: return "G3EdgeEnd";
    case Branch::expansion_max_degree: return "ExpansionMaxDegree";
    case Branch::g11_apex: return "G11Apex";
  }
  return "?";
}

namespace {

using nlohmann::json;

json cert_to_json(const EmbeddingCert& c) {
  return {{"type", "Embedding"}, {"pattern", c.pattern}, {"map", c.map}};
}

json cert_to_json(const DominatingSetCert& c) {
  return {{"type", "DominatingSet"}, {"set", c.set}};
}

json cert_to_json(const CutTriangleCert& c) {
  return {{"type", "CutTriangle"}, {"x", c.x}, {"y", c.y}, {"z", c.z}};
}

json cert_to_json(const MaxDegreeCert&) {
  return {{"type", "MaxDegreeFallback"}};
}

json cert_to_json(const NearMaxDegreeCert&) {
  return {{"type", "NearMaxDegreeFallback"}};
}

json cert_to_json(const OracleFallbackCert&) {
  return {{"type", "OracleFallback"}};
}

json cert_to_json(const FiveRingCert& c) {
  return {{"type", "FiveRing"}, {"s1", c.rings[0]}, {"s2", c.rings[1]},
          {"s3", c.rings[2]}, {"s4", c.rings[3]}, {"s5", c.rings[4]}};
}

json cert_to_json(const DominatingCliqueCert& c) {
  return {{"type", "DominatingClique"}, {"set", c.set}};
}

json cert_to_json(const G1Cert& c) {
  json comps = json::array();
  for (const auto& comp : c.components)
    comps.push_back({{"vertices", comp.vertices}, {"attach", comp.attach}});
  return {{"type", "G1"}, {"clique", c.clique}, {"components", comps}};
}

json cert_to_json(const G2Cert& c) {
  json pairs = json::array();
  for (const auto& [u, v] : c.matching) pairs.push_back({u, v});
  return {{"type", "G2"}, {"x_side", c.x_side}, {"y_side", c.y_side},
          {"matching", pairs}};
}

const char* attach_name(G3Attach a) {
  switch (a) {
    case G3Attach::x: return "x";
    case G3Attach::y: return "y";
    case G3Attach::both: return "both";
  }
  return "?";
}

json cert_to_json(const G3Cert& c) {
  json comps = json::array();
  for (const auto& comp : c.components)
    comps.push_back(
        {{"vertices", comp.vertices}, {"attach", attach_name(comp.attach)}});
  return {{"type", "G3"}, {"h", c.h_vertices}, {"x", c.x}, {"y", c.y},
          {"components", comps}};
}

json cert_to_json(const ApexCert& c) {
  return {{"type", "Apex"}, {"x", c.x}, {"c", c.c}};
}

// Strictly increasing vertex ids inside the graph.
bool valid_set(const Graph& g, const VertexSet& s) {
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= g.vertex_count()) return false;
    if (i > 0 && s[i] <= s[i - 1]) return false;
  }
  return true;
}

bool embedding_ok(const Graph& g, const EmbeddingCert& cert,
                  const char* expected) {
  if (cert.pattern != expected) return false;
  Pattern p;
  try {
    p = named_pattern(cert.pattern);
  } catch (const Error&) {
    return false;
  }
  int k = p.shape.vertex_count();
  if (static_cast<int>(cert.map.size()) != k) return false;
  for (int i = 0; i < k; ++i) {
    if (cert.map[i] < 0 || cert.map[i] >= g.vertex_count()) return false;
    for (int j = i + 1; j < k; ++j) {
      if (cert.map[i] == cert.map[j]) return false;
      if (g.adjacent(cert.map[i], cert.map[j]) != p.shape.adjacent(i, j))
        return false;
    }
  }
  return true;
}

bool has_pattern(const Graph& g, const char* name) {
  return find_induced(g, named_pattern(name)).has_value();
}

bool validate_g1(const Graph& g, const G1Cert& cert) {
  if (cert.clique.empty() || !valid_set(g, cert.clique)) return false;
  if (!is_clique(g, cert.clique) || !is_dominating(g, cert.clique))
    return false;
  std::vector<char> in_clique(g.vertex_count(), 0);
  for (int v : cert.clique) in_clique[v] = 1;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (in_clique[v]) continue;
    bool extends = true;
    for (int k : cert.clique)
      if (!g.adjacent(v, k)) {
        extends = false;
        break;
      }
    if (extends) return false;  // clique not maximal
  }
  auto comps = components_excluding(g, cert.clique);
  if (comps.size() != cert.components.size()) return false;
  for (size_t i = 0; i < comps.size(); ++i) {
    const auto& rec = cert.components[i];
    if (rec.vertices != comps[i] || !is_clique(g, rec.vertices))
      return false;
    if (!std::binary_search(cert.clique.begin(), cert.clique.end(),
                            rec.attach))
      return false;
    for (int v : rec.vertices) {
      if (!g.adjacent(v, rec.attach)) return false;
      for (int k : cert.clique)
        if (k != rec.attach && g.adjacent(v, k)) return false;
    }
  }
  return true;
}

bool validate_g2(const Graph& g, const G2Cert& cert) {
  if (cert.x_side.empty() || cert.y_side.empty()) return false;
  if (!valid_set(g, cert.x_side) || !valid_set(g, cert.y_side))
    return false;
  VertexSet merged = cert.x_side;
  merged.insert(merged.end(), cert.y_side.begin(), cert.y_side.end());
  std::sort(merged.begin(), merged.end());
  for (size_t i = 0; i < merged.size(); ++i)
    if (merged[i] != static_cast<int>(i)) return false;
  if (!is_clique(g, cert.x_side) || !is_clique(g, cert.y_side))
    return false;
  std::vector<std::pair<int, int>> cross;
  for (int u : cert.x_side)
    for (int v : cert.y_side)
      if (g.adjacent(u, v)) cross.emplace_back(u, v);
  if (cross.empty() || cross != cert.matching) return false;
  for (size_t i = 0; i < cross.size(); ++i)
    for (size_t j = i + 1; j < cross.size(); ++j)
      if (cross[i].first == cross[j].first ||
          cross[i].second == cross[j].second)
        return false;
  return true;
}

bool validate_g3(const Graph& g, const G3Cert& cert) {
  int n = g.vertex_count();
  if (cert.x < 0 || cert.y < 0 || cert.x >= n || cert.y >= n ||
      cert.x == cert.y || !g.adjacent(cert.x, cert.y))
    return false;
  if (!valid_set(g, cert.h_vertices)) return false;
  VertexSet ends = {std::min(cert.x, cert.y), std::max(cert.x, cert.y)};
  if (!is_dominating(g, ends)) return false;
  if (!std::binary_search(cert.h_vertices.begin(), cert.h_vertices.end(),
                          cert.x) ||
      !std::binary_search(cert.h_vertices.begin(), cert.h_vertices.end(),
                          cert.y))
    return false;
  auto comps = components_excluding(g, ends);
  std::vector<char> stripped(comps.size(), 0);
  int both_count = 0;
  for (const auto& rec : cert.components) {
    size_t found = comps.size();
    for (size_t i = 0; i < comps.size(); ++i)
      if (!stripped[i] && comps[i] == rec.vertices) {
        found = i;
        break;
      }
    if (found == comps.size() || !is_clique(g, rec.vertices)) return false;
    stripped[found] = 1;
    auto complete_to = [&](int pivot) {
      for (int v : rec.vertices)
        if (!g.adjacent(v, pivot)) return false;
      return true;
    };
    bool cx = complete_to(cert.x), cy = complete_to(cert.y);
    switch (rec.attach) {
      case G3Attach::x:
        if (!cx || cy) return false;
        break;
      case G3Attach::y:
        if (!cy || cx) return false;
        break;
      case G3Attach::both:
        if (!cx || !cy || ++both_count > 1) return false;
        break;
    }
  }
  VertexSet remainder = ends;
  for (size_t i = 0; i < comps.size(); ++i)
    if (!stripped[i])
      remainder.insert(remainder.end(), comps[i].begin(), comps[i].end());
  std::sort(remainder.begin(), remainder.end());
  if (remainder != cert.h_vertices) return false;
  Graph h = induced_subgraph(g, cert.h_vertices);
  return is_bipartite(h).has_value() && !has_pattern(h, "2P2");
}

bool validate_five_ring(const Graph& g, const FiveRingCert& cert) {
  int n = g.vertex_count();
  size_t total = 0;
  for (const VertexSet& ring : cert.rings) {
    if (ring.empty() || !valid_set(g, ring)) return false;
    total += ring.size();
  }
  if (total != static_cast<size_t>(n)) return false;
  std::vector<int> position(n, -1);
  for (int i = 0; i < 5; ++i)
    for (int v : cert.rings[i]) {
      if (position[v] != -1) return false;
      position[v] = i;
    }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      int d = (position[u] - position[v] + 5) % 5;
      bool want = d == 1 || d == 4;
      if (g.adjacent(u, v) != want) return false;
    }
  return true;
}

}  // namespace

std::string certificate_json(const StructureCertificate& cert) {
  json j = std::visit([](const auto& c) { return cert_to_json(c); }, cert);
  return j.dump();
}

bool validate_certificate(const Graph& g, const GallaiResult& result,
                          ClassLabel label) {
  int n = g.vertex_count();
  if (n == 0 || result.vertex < 0 || result.vertex >= n) return false;
  if (!is_connected(g)) return false;
  switch (result.branch) {
    case Branch::p3p1_middle: {
      const auto* cert = std::get_if<EmbeddingCert>(&result.witness);
      return label == ClassLabel::claw_p3_2p1 && cert &&
             embedding_ok(g, *cert, "P3+P1") &&
             result.vertex == cert->map[1];
    }
    case Branch::near_max_degree_fallback:
      return label == ClassLabel::claw_p3_2p1 &&
             std::holds_alternative<NearMaxDegreeCert>(result.witness) &&
             !has_pattern(g, "P3+P1") &&
             result.vertex == lowest_max_degree_vertex(g);
    case Branch::triangle_dominating: {
      const auto* cert = std::get_if<EmbeddingCert>(&result.witness);
      return label == ClassLabel::claw_k3_2p1 && cert &&
             embedding_ok(g, *cert, "K3+P1") &&
             result.vertex ==
                 std::min({cert->map[0], cert->map[1], cert->map[2]});
    }
    case Branch::path_or_cycle:
      return label == ClassLabel::claw_k3_2p1 &&
             std::holds_alternative<MaxDegreeCert>(result.witness) &&
             !has_pattern(g, "K3") && g.max_degree() <= 2 &&
             result.vertex == 0;
    case Branch::oracle_fallback:
      return label == ClassLabel::claw_k3_2p1 &&
             std::holds_alternative<OracleFallbackCert>(result.witness) &&
             n <= kOracleFallbackMax && has_pattern(g, "K3") &&
             !has_pattern(g, "K3+P1") && is_gallai_vertex(g, result.vertex);
    case Branch::high_degree_edge_end: {
      const auto* cert = std::get_if<EmbeddingCert>(&result.witness);
      return label == ClassLabel::claw_2p2_p1 && cert &&
             embedding_ok(g, *cert, "2P2") &&
             result.vertex ==
                 heavier_endpoint(g, cert->map[0], cert->map[1]);
    }
    case Branch::max_degree_fallback: {
      if (result.vertex != lowest_max_degree_vertex(g)) return false;
      if (label == ClassLabel::claw_2p2_p1)
        return std::holds_alternative<MaxDegreeCert>(result.witness) &&
               !has_pattern(g, "2P2");
      if (label == ClassLabel::claw_p2_3p1)
        return std::holds_alternative<MaxDegreeCert>(result.witness) &&
               !cut_triangle(g) && !has_pattern(g, "P2+2P1");
      if (label == ClassLabel::p5_diamond) {
        const auto* cert = std::get_if<G3Cert>(&result.witness);
        return cert && cert->components.empty() && !has_pattern(g, "C5") &&
               validate_g3(g, *cert);
      }
      return false;
    }
    case Branch::cut_triangle: {
      const auto* cert = std::get_if<CutTriangleCert>(&result.witness);
      if (label != ClassLabel::claw_p2_3p1 || !cert) return false;
      auto triple = cut_triangle(g);
      return triple &&
             *triple == std::tuple{cert->x, cert->y, cert->z} &&
             result.vertex == cert->x;
    }
    case Branch::dominating_p2p1: {
      const auto* cert = std::get_if<EmbeddingCert>(&result.witness);
      return label == ClassLabel::claw_p2_3p1 && cert &&
             embedding_ok(g, *cert, "P2+2P1") && !cut_triangle(g) &&
             result.vertex ==
                 heavier_endpoint(g, cert->map[0], cert->map[1]);
    }
    case Branch::five_ring_max_degree: {
      const auto* cert = std::get_if<FiveRingCert>(&result.witness);
      return (label == ClassLabel::p5_triangle ||
              label == ClassLabel::p5_paw) &&
             cert && validate_five_ring(g, *cert) &&
             result.vertex == lowest_max_degree_vertex(g);
    }
    case Branch::dominating_vertex:
    case Branch::dominating_edge_end: {
      const auto* cert = std::get_if<DominatingCliqueCert>(&result.witness);
      if ((label != ClassLabel::p5_triangle &&
           label != ClassLabel::p5_paw) ||
          !cert || has_pattern(g, "C5"))
        return false;
      auto dom = dominating_clique_le2(g);
      if (!dom || *dom != cert->set) return false;
      if (result.branch == Branch::dominating_vertex)
        return cert->set.size() == 1 && result.vertex == cert->set[0];
      return cert->set.size() == 2 &&
             result.vertex ==
                 heavier_endpoint(g, cert->set[0], cert->set[1]);
    }
    case Branch::multipartite_max_degree:
      return label == ClassLabel::p5_paw &&
             std::holds_alternative<MaxDegreeCert>(result.witness) &&
             has_pattern(g, "K3") &&
             complete_multipartite_parts(g).has_value() &&
             result.vertex == lowest_max_degree_vertex(g);
    case Branch::g1_star_like: {
      const auto* cert = std::get_if<G1Cert>(&result.witness);
      if (label != ClassLabel::p5_diamond || !cert ||
          has_pattern(g, "C5") || !validate_g1(g, *cert))
        return false;
      if (cert->components.empty())
        return result.vertex == cert->clique.front();
      size_t pick = 0;
      for (size_t i = 1; i < cert->components.size(); ++i)
        if (cert->components[i].vertices.size() >
            cert->components[pick].vertices.size())
          pick = i;
      return result.vertex == cert->components[pick].attach;
    }
    case Branch::g2_traceable: {
      const auto* cert = std::get_if<G2Cert>(&result.witness);
      return label == ClassLabel::p5_diamond && cert &&
             !has_pattern(g, "C5") && validate_g2(g, *cert) &&
             result.vertex == 0;
    }
    case Branch::g3_edge_end: {
      const auto* cert = std::get_if<G3Cert>(&result.witness);
      if (label != ClassLabel::p5_diamond || !cert ||
          cert->components.empty() || has_pattern(g, "C5") ||
          !validate_g3(g, *cert))
        return false;
      auto core_degree = [&](int v) {
        int d = 0;
        for (int u : cert->h_vertices)
          if (u != v && g.adjacent(v, u)) ++d;
        return d;
      };
      int dx = core_degree(cert->x), dy = core_degree(cert->y);
      int expect = dx == dy ? std::min(cert->x, cert->y)
                            : (dx > dy ? cert->x : cert->y);
      return result.vertex == expect;
    }
    case Branch::expansion_max_degree: {
      const auto* cert = std::get_if<EmbeddingCert>(&result.witness);
      return label == ClassLabel::p5_diamond && cert &&
             embedding_ok(g, *cert, "C5") && !has_pattern(g, "2P2") &&
             result.vertex == lowest_max_degree_vertex(g);
    }
    case Branch::g11_apex: {
      const auto* cert = std::get_if<ApexCert>(&result.witness);
      if (label != ClassLabel::p5_diamond || !cert ||
          result.vertex != cert->x || cert->c.empty())
        return false;
      if (!has_pattern(g, "C5") || !has_pattern(g, "2P2")) return false;
      auto apex = find_g11_apex(g);
      if (!apex || *apex != cert->x) return false;
      VertexSet captured;
      for (const VertexSet& comp : components_excluding(g, {cert->x})) {
        bool inside = true;
        for (int v : comp)
          if (!g.adjacent(cert->x, v)) {
            inside = false;
            break;
          }
        if (inside)
          captured.insert(captured.end(), comp.begin(), comp.end());
      }
      std::sort(captured.begin(), captured.end());
      return captured == cert->c;
    }
  }
  return false;
}

}  // namespace gallai
