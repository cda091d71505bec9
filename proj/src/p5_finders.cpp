#include "gallai/p5_finders.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <variant>

#include "gallai/claw_finders.hpp"
#include "gallai/errors.hpp"
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

// Bron-Kerbosch with pivoting over word-mask sets. Cliques come out
// sorted, the list sorted lexicographically.
class CliqueEnum {
 public:
  explicit CliqueEnum(const Graph& g)
      : g_(g), w_(g.words()) {}

  std::vector<VertexSet> run() {
    int n = g_.vertex_count();
    std::vector<uint64_t> p(w_, 0), x(w_, 0);
    for (int v = 0; v < n; ++v) p[v >> 6] |= uint64_t{1} << (v & 63);
    VertexSet r;
    expand(r, std::move(p), std::move(x));
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  static bool empty(const std::vector<uint64_t>& s) {
    for (uint64_t word : s)
      if (word) return false;
    return true;
  }

  std::vector<uint64_t> meet(const std::vector<uint64_t>& s, int v) const {
    std::vector<uint64_t> out(w_);
    auto row = g_.row(v);
    for (int i = 0; i < w_; ++i) out[i] = s[i] & row[i];
    return out;
  }

  int overlap(const std::vector<uint64_t>& s, int v) const {
    int count = 0;
    auto row = g_.row(v);
    for (int i = 0; i < w_; ++i)
      count += std::popcount(s[i] & row[i]);
    return count;
  }

  void expand(VertexSet& r, std::vector<uint64_t> p, std::vector<uint64_t> x) {
    if (empty(p)) {
      if (empty(x)) {
        VertexSet clique = r;
        std::sort(clique.begin(), clique.end());
        out_.push_back(std::move(clique));
      }
      return;
    }
    int pivot = -1, best = -1;
    for (int i = 0; i < w_; ++i)
      for (uint64_t m = p[i] | x[i]; m != 0; m &= m - 1) {
        int u = i * 64 + std::countr_zero(m);
        int c = overlap(p, u);
        if (c > best) {
          best = c;
          pivot = u;
        }
      }
    auto prow = g_.row(pivot);
    for (int i = 0; i < w_; ++i) {
      uint64_t cand = p[i] & ~prow[i];
      while (cand) {
        int v = i * 64 + std::countr_zero(cand);
        cand &= cand - 1;
        r.push_back(v);
        expand(r, meet(p, v), meet(x, v));
        r.pop_back();
        p[i] &= ~(uint64_t{1} << (v & 63));
        x[i] |= uint64_t{1} << (v & 63);
      }
    }
  }

  const Graph& g_;
  int w_;
  std::vector<VertexSet> out_;
};

std::optional<G1Cert> try_g1(const Graph& g) {
  for (const VertexSet& clique : CliqueEnum(g).run()) {
    if (!is_dominating(g, clique)) continue;
    G1Cert cert;
    cert.clique = clique;
    bool ok = true;
    for (const VertexSet& comp : components_excluding(g, clique)) {
      if (!is_clique(g, comp)) {
        ok = false;
        break;
      }
      int attach = -1;
      for (int k : clique) {
        bool touched = false;
        for (int v : comp)
          if (g.adjacent(k, v)) {
            touched = true;
            break;
          }
        if (!touched) continue;
        if (attach != -1) {
          attach = -2;
          break;
        }
        attach = k;
      }
      if (attach < 0) {
        ok = false;
        break;
      }
      bool complete = true;
      for (int v : comp)
        if (!g.adjacent(v, attach)) {
          complete = false;
          break;
        }
      if (!complete) {
        ok = false;
        break;
      }
      cert.components.push_back({comp, attach});
    }
    if (ok) return cert;
  }
  return std::nullopt;
}

std::optional<G2Cert> try_g2(const Graph& g) {
  Graph co = complement(g);
  auto comps = connected_components(co);
  int c = static_cast<int>(comps.size());
  if (c > 20)
    raise(Errc::structure_violation,
          "complement splits into more than 20 components");
  auto colors = is_bipartite(co);
  if (!colors) return std::nullopt;
  for (uint32_t mask = 0; mask < (1u << c); ++mask) {
    VertexSet xs, ys;
    for (int i = 0; i < c; ++i) {
      bool flip = (mask >> i) & 1u;
      for (int v : comps[i]) {
        bool y_side = ((*colors)[v] == 1) != flip;
        (y_side ? ys : xs).push_back(v);
      }
    }
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    std::vector<std::pair<int, int>> matching;
    bool ok = !xs.empty() && !ys.empty();
    for (int u : xs) {
      if (!ok) break;
      int partner = -1;
      for (int v : ys)
        if (g.adjacent(u, v)) {
          if (partner != -1) {
            ok = false;
            break;
          }
          partner = v;
        }
      if (partner != -1) matching.emplace_back(u, partner);
    }
    for (int v : ys) {
      if (!ok) break;
      int hits = 0;
      for (int u : xs)
        if (g.adjacent(u, v)) ++hits;
      if (hits > 1) ok = false;
    }
    if (ok && !matching.empty()) return G2Cert{xs, ys, matching};
  }
  return std::nullopt;
}

std::optional<G3Cert> try_g3(const Graph& g) {
  int n = g.vertex_count();
  const Pattern two_p2 = named_pattern("2P2");
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (!g.adjacent(x, y) || !is_dominating(g, {x, y})) continue;
      std::vector<G3Cert::Component> stripped;
      VertexSet core = {x, y};
      int both_seen = 0;
      bool bad = false;
      for (const VertexSet& comp : components_excluding(g, {x, y})) {
        auto complete_to = [&](int pivot) {
          for (int v : comp)
            if (!g.adjacent(v, pivot)) return false;
          return true;
        };
        bool cx = complete_to(x), cy = complete_to(y);
        if (is_clique(g, comp) && (cx || cy)) {
          if (cx && cy && ++both_seen > 1) {
            // A pendant clique complete to both ends would sit inside a
            // triangle with the edge, so a second one can never be folded
            // into the bipartite core either; this edge is hopeless.
            bad = true;
            break;
          }
          G3Attach tag =
              cx && cy ? G3Attach::both : (cx ? G3Attach::x : G3Attach::y);
          stripped.push_back({comp, tag});
        } else {
          core.insert(core.end(), comp.begin(), comp.end());
        }
      }
      if (bad) continue;
      std::sort(core.begin(), core.end());
      Graph h = induced_subgraph(g, core);
      if (!is_bipartite(h) || !is_free(h, two_p2)) continue;
      return G3Cert{core, x, y, stripped};
    }
  return std::nullopt;
}

StructureCertificate classify_impl(const Graph& g) {
  if (auto star = try_g1(g)) return *star;
  if (auto pair = try_g2(g)) return *pair;
  if (auto edge = try_g3(g)) return *edge;
  raise(Errc::structure_violation,
        "connected (P5,C5,diamond)-free graph fits no decomposition shape");
}

}  // namespace

std::optional<std::array<VertexSet, 5>> five_ring_partition(const Graph& g) {
  int n = g.vertex_count();
  if (n < 5) return std::nullopt;
  // Vertices with identical open neighborhoods are interchangeable; a
  // blow-up of C5 has exactly five such classes, one per ring position,
  // and they are stable sets automatically (an edge inside a class would
  // put a vertex in its own neighborhood).
  std::map<std::vector<uint64_t>, VertexSet> rows;
  for (int v = 0; v < n; ++v) {
    auto r = g.row(v);
    rows[std::vector<uint64_t>(r.begin(), r.end())].push_back(v);
  }
  if (rows.size() != 5) return std::nullopt;
  std::array<VertexSet, 5> cls;
  int next = 0;
  for (auto& entry : rows) cls[next++] = std::move(entry.second);
  auto linked = [&](int a, int b) {
    return g.adjacent(cls[a].front(), cls[b].front());
  };
  for (int a = 0; a < 5; ++a) {
    int deg = 0;
    for (int b = 0; b < 5; ++b)
      if (b != a && linked(a, b)) ++deg;
    // Five class nodes of degree two form a single 5-cycle.
    if (deg != 2) return std::nullopt;
  }
  int s1 = 0;
  while (cls[s1].front() != 0) ++s1;
  int na = -1, nb = -1;
  for (int b = 0; b < 5; ++b) {
    if (b == s1 || !linked(s1, b)) continue;
    (na == -1 ? na : nb) = b;
  }
  int s2 = cls[na].front() < cls[nb].front() ? na : nb;
  std::array<VertexSet, 5> out;
  out[0] = cls[s1];
  out[1] = cls[s2];
  int prev = s1, cur = s2;
  for (int step = 2; step < 5; ++step) {
    int nxt = -1;
    for (int b = 0; b < 5; ++b)
      if (b != prev && b != cur && linked(cur, b)) nxt = b;
    out[step] = cls[nxt];
    prev = cur;
    cur = nxt;
  }
  return out;
}

std::optional<VertexSet> dominating_clique_le2(const Graph& g) {
  int n = g.vertex_count();
  for (int v = 0; v < n; ++v)
    if (is_dominating(g, {v})) return VertexSet{v};
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.adjacent(u, v) && is_dominating(g, {u, v}))
        return VertexSet{u, v};
  return std::nullopt;
}

StructureCertificate classify_g123(const Graph& g) {
  if (!is_connected(g))
    raise(Errc::precondition_c5, "classification needs a connected graph");
  for (const char* name : {"P5", "C5", "diamond"}) {
    const Pattern p = named_pattern(name);
    if (find_induced(g, p))
      raise(Errc::precondition_c5,
            std::string("graph contains an induced ") + name);
  }
  return classify_impl(g);
}

std::optional<int> find_g11_apex(const Graph& g) {
  int n = g.vertex_count();
  for (int x = 0; x < n; ++x) {
    bool close = true;
    for (int v = 0; v < n && close; ++v) {
      if (v == x || g.adjacent(x, v)) continue;
      bool two_steps = false;
      for (int w = 0; w < n && !two_steps; ++w)
        two_steps = w != x && g.adjacent(x, w) && g.adjacent(w, v);
      if (!two_steps) close = false;
    }
    if (!close) continue;
    for (const VertexSet& comp : components_excluding(g, {x})) {
      bool inside = true;
      for (int v : comp)
        if (!g.adjacent(x, v)) {
          inside = false;
          break;
        }
      if (inside) return x;
    }
  }
  return std::nullopt;
}

GallaiResult find_gallai_p5_triangle(const Graph& g, bool skip_membership) {
  check_entry(g, ClassLabel::p5_triangle, skip_membership);
  static const Pattern kC5 = named_pattern("C5");
  if (find_induced(g, kC5)) {
    auto rings = five_ring_partition(g);
    if (!rings)
      raise(Errc::structure_violation,
            "C5 present but the graph is not a blow-up of C5");
    return {lowest_max_degree_vertex(g), Branch::five_ring_max_degree,
            FiveRingCert{*rings}};
  }
  auto dom = dominating_clique_le2(g);
  if (!dom)
    raise(Errc::structure_violation,
          "C5-free instance with no dominating vertex or edge");
  if (dom->size() == 1)
    return {dom->front(), Branch::dominating_vertex,
            DominatingCliqueCert{*dom}};
  return {heavier_endpoint(g, (*dom)[0], (*dom)[1]),
          Branch::dominating_edge_end, DominatingCliqueCert{*dom}};
}

GallaiResult find_gallai_p5_paw(const Graph& g, bool skip_membership) {
  check_entry(g, ClassLabel::p5_paw, skip_membership);
  static const Pattern kTriangle = named_pattern("triangle");
  if (is_free(g, kTriangle)) {
    // Triangle-free paw-free graphs are exactly the triangle-free ones;
    // reuse that finder wholesale.
    return find_gallai_p5_triangle(g, true);
  }
  if (!complete_multipartite_parts(g))
    raise(Errc::structure_violation,
          "paw-free graph with a triangle must be complete multipartite");
  return {lowest_max_degree_vertex(g), Branch::multipartite_max_degree,
          MaxDegreeCert{}};
}

GallaiResult find_gallai_p5_diamond(const Graph& g, bool skip_membership) {
  check_entry(g, ClassLabel::p5_diamond, skip_membership);
  static const Pattern kC5 = named_pattern("C5");
  static const Pattern k2P2 = named_pattern("2P2");
  auto c5 = find_induced(g, kC5);
  if (!c5) {
    StructureCertificate cert = classify_impl(g);
    if (const auto* star = std::get_if<G1Cert>(&cert)) {
      if (star->components.empty())
        return {star->clique.front(), Branch::g1_star_like, cert};
      size_t pick = 0;
      for (size_t i = 1; i < star->components.size(); ++i)
        if (star->components[i].vertices.size() >
            star->components[pick].vertices.size())
          pick = i;
      return {star->components[pick].attach, Branch::g1_star_like, cert};
    }
    if (std::holds_alternative<G2Cert>(cert))
      return {0, Branch::g2_traceable, cert};
    const G3Cert& core = std::get<G3Cert>(cert);
    if (core.components.empty())
      return {lowest_max_degree_vertex(g), Branch::max_degree_fallback,
              cert};
    auto core_degree = [&](int v) {
      int d = 0;
      for (int u : core.h_vertices)
        if (u != v && g.adjacent(v, u)) ++d;
      return d;
    };
    int dx = core_degree(core.x), dy = core_degree(core.y);
    int vertex = dx == dy ? core.x : (dx > dy ? core.x : core.y);
    return {vertex, Branch::g3_edge_end, cert};
  }
  if (is_free(g, k2P2))
    return {lowest_max_degree_vertex(g), Branch::expansion_max_degree,
            EmbeddingCert{kC5.name, *c5}};
  auto apex = find_g11_apex(g);
  if (!apex)
    raise(Errc::structure_violation,
          "C5 and 2P2 both present but no two-step apex exists");
  VertexSet captured;
  for (const VertexSet& comp : components_excluding(g, {*apex})) {
    bool inside = true;
    for (int v : comp)
      if (!g.adjacent(*apex, v)) {
        inside = false;
        break;
      }
    if (inside) captured.insert(captured.end(), comp.begin(), comp.end());
  }
  std::sort(captured.begin(), captured.end());
  return {*apex, Branch::g11_apex, ApexCert{*apex, captured}};
}

GallaiResult find_gallai(const Graph& g, ClassLabel label,
                         bool skip_membership) {
  switch (label) {
    case ClassLabel::claw_p3_2p1:
      return find_gallai_claw_p3_2p1(g, skip_membership);
    case ClassLabel::claw_k3_2p1:
      return find_gallai_claw_k3_2p1(g, skip_membership);
    case ClassLabel::claw_2p2_p1:
      return find_gallai_claw_2p2_p1(g, skip_membership);
    case ClassLabel::claw_p2_3p1:
      return find_gallai_claw_p2_3p1(g, skip_membership);
    case ClassLabel::p5_triangle:
      return find_gallai_p5_triangle(g, skip_membership);
    case ClassLabel::p5_paw:
      return find_gallai_p5_paw(g, skip_membership);
    case ClassLabel::p5_diamond:
      return find_gallai_p5_diamond(g, skip_membership);
  }
  raise(Errc::unknown_pattern, "unhandled class label");
}

}  // namespace gallai
