#include "gallai/generators.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <memory>
#include <random>
#include <unordered_set>
#include <utility>

#include "gallai/canonical.hpp"
#include "gallai/claw_finders.hpp"
#include "gallai/errors.hpp"

namespace gallai {

namespace {

Graph complete_graph(int n) {
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
  return b.build();
}

// K_n with the edges (0,1), (2,3), ... removed. For odd n the last vertex
// keeps all its edges.
Graph complete_minus_matching(int n) {
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!(j == i + 1 && i % 2 == 0)) b.add_edge(i, j);
  return b.build();
}

// Cycle of r parts with balanced sizes, consecutive parts joined
// completely. Parts are cliques or stable sets depending on the flag.
std::optional<Graph> blown_cycle(int n, int r, bool clique_parts) {
  if (n < r) return std::nullopt;
  std::vector<VertexSet> part(r);
  int base = n / r, extra = n % r, v = 0;
  for (int p = 0; p < r; ++p) {
    int size = base + (p < extra ? 1 : 0);
    for (int s = 0; s < size; ++s) part[p].push_back(v++);
  }
  GraphBuilder b(n);
  for (int p = 0; p < r; ++p) {
    if (clique_parts)
      for (size_t i = 0; i < part[p].size(); ++i)
        for (size_t j = i + 1; j < part[p].size(); ++j)
          b.add_edge(part[p][i], part[p][j]);
    for (int u : part[p])
      for (int w : part[(p + 1) % r]) b.add_edge(u, w);
  }
  return b.build();
}

Graph cycle_graph(int n) {
  GraphBuilder b(n);
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  if (n >= 3) b.add_edge(n - 1, 0);
  return b.build();
}

Graph path_graph(int n) {
  GraphBuilder b(n);
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return b.build();
}

Graph complete_multipartite_graph(const std::vector<int>& sizes) {
  int n = 0;
  for (int s : sizes) n += s;
  std::vector<int> part_of(n);
  int v = 0;
  for (size_t p = 0; p < sizes.size(); ++p)
    for (int s = 0; s < sizes[p]; ++s) part_of[v++] = static_cast<int>(p);
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (part_of[i] != part_of[j]) b.add_edge(i, j);
  return b.build();
}

uint64_t rand_next(std::mt19937_64& rng) { return rng(); }

int rand_below(std::mt19937_64& rng, int bound) {
  return static_cast<int>(rand_next(rng) % static_cast<uint64_t>(bound));
}

double rand_unit(std::mt19937_64& rng) {
  return static_cast<double>(rand_next(rng) >> 11) * 0x1.0p-53;
}

std::optional<Graph> double_star(int n, std::mt19937_64& rng) {
  if (n < 2) return std::nullopt;
  GraphBuilder b(n);
  b.add_edge(0, 1);
  for (int v = 2; v < n; ++v) b.add_edge(v, rand_below(rng, 2));
  return b.build();
}

// A clique with smaller cliques hanging off it, each pendant clique fully
// attached to a single hub vertex.
std::optional<Graph> clique_star(int n, std::mt19937_64& rng) {
  if (n < 2) return std::nullopt;
  int hub = 2 + rand_below(rng, std::min(n - 1, 10));
  GraphBuilder b(n);
  for (int i = 0; i < hub; ++i)
    for (int j = i + 1; j < hub; ++j) b.add_edge(i, j);
  int v = hub;
  while (v < n) {
    int size = 1 + rand_below(rng, std::min(n - v, 5));
    int attach = rand_below(rng, hub);
    for (int i = 0; i < size; ++i) {
      b.add_edge(v + i, attach);
      for (int j = 0; j < i; ++j) b.add_edge(v + i, v + j);
    }
    v += size;
  }
  return b.build();
}

// Two cliques joined by a partial matching.
std::optional<Graph> matched_cliques(int n, std::mt19937_64& rng) {
  if (n < 2) return std::nullopt;
  int a = std::clamp(n / 2 + rand_below(rng, 3) - 1, 1, n - 1);
  GraphBuilder b(n);
  for (int i = 0; i < a; ++i)
    for (int j = i + 1; j < a; ++j) b.add_edge(i, j);
  for (int i = a; i < n; ++i)
    for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
  int pairs = 1 + rand_below(rng, std::min(a, n - a));
  for (int i = 0; i < pairs; ++i) b.add_edge(i, a + i);
  return b.build();
}

Graph er_graph(int n, double p, std::mt19937_64& rng) {
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rand_unit(rng) < p) b.add_edge(i, j);
  return b.build();
}

Graph delete_vertex(const Graph& g, int v) {
  int n = g.vertex_count();
  GraphBuilder b(n - 1);
  for (int i = 0; i < n; ++i) {
    if (i == v) continue;
    for (int j = i + 1; j < n; ++j) {
      if (j == v || !g.adjacent(i, j)) continue;
      b.add_edge(i - (i > v ? 1 : 0), j - (j > v ? 1 : 0));
    }
  }
  return b.build();
}

// Keep deleting a random vertex of some forbidden embedding until the
// graph is in the class. The result usually ends up below the requested
// order; the caller rejects those.
Graph repair_to_class(Graph g, ClassLabel label, std::mt19937_64& rng) {
  for (;;) {
    std::optional<std::vector<int>> found;
    for (const Pattern& p : class_patterns(label)) {
      found = find_induced(g, p);
      if (found) break;
    }
    if (!found) return g;
    g = delete_vertex(g, (*found)[rand_below(rng, static_cast<int>(found->size()))]);
  }
}

enum class Proposal {
  complete,
  near_complete,
  ring5,
  ring6,
  ring7,
  five_ring,
  cycle,
  path,
  bipartite,
  multipartite,
  star,
  double_star,
  clique_star,
  matched_cliques,
  er_dense,
  er_sparse,
};

const std::vector<Proposal>& proposal_schedule(ClassLabel label) {
  static const std::vector<Proposal> p3{
      Proposal::ring5,    Proposal::near_complete, Proposal::ring6,
      Proposal::complete, Proposal::ring7,         Proposal::er_dense};
  static const std::vector<Proposal> k3{Proposal::ring5, Proposal::cycle,
                                        Proposal::path, Proposal::er_sparse};
  static const std::vector<Proposal> pp{Proposal::complete,
                                        Proposal::near_complete,
                                        Proposal::ring5, Proposal::er_dense};
  static const std::vector<Proposal> p2{Proposal::near_complete,
                                        Proposal::complete, Proposal::ring5,
                                        Proposal::er_dense};
  static const std::vector<Proposal> tri{Proposal::five_ring,
                                         Proposal::bipartite, Proposal::star,
                                         Proposal::er_sparse};
  static const std::vector<Proposal> paw{
      Proposal::multipartite, Proposal::five_ring, Proposal::bipartite,
      Proposal::complete, Proposal::er_sparse};
  static const std::vector<Proposal> dia{
      Proposal::clique_star, Proposal::matched_cliques, Proposal::five_ring,
      Proposal::double_star, Proposal::bipartite,       Proposal::er_sparse};
  switch (label) {
    case ClassLabel::claw_p3_2p1: return p3;
    case ClassLabel::claw_k3_2p1: return k3;
    case ClassLabel::claw_2p2_p1: return pp;
    case ClassLabel::claw_p2_3p1: return p2;
    case ClassLabel::p5_triangle: return tri;
    case ClassLabel::p5_paw: return paw;
    case ClassLabel::p5_diamond: return dia;
  }
  return p3;
}

std::optional<Graph> propose(Proposal kind, int n, int round,
                             std::mt19937_64& rng) {
  switch (kind) {
    case Proposal::complete: return complete_graph(n);
    case Proposal::near_complete: return complete_minus_matching(n);
    case Proposal::ring5: return blown_cycle(n, 5, true);
    case Proposal::ring6: return blown_cycle(n, 6, true);
    case Proposal::ring7: return blown_cycle(n, 7, true);
    case Proposal::five_ring: return blown_cycle(n, 5, false);
    case Proposal::cycle: return cycle_graph(n);
    case Proposal::path: return path_graph(n);
    case Proposal::bipartite:
      if (n < 2) return std::nullopt;
      return complete_multipartite_graph({n / 2, n - n / 2});
    case Proposal::multipartite: {
      if (n < 2) return std::nullopt;
      int parts = 2 + rand_below(rng, std::min(n - 1, 4));
      std::vector<int> sizes(parts, 1);
      for (int rest = n - parts; rest > 0; --rest)
        ++sizes[rand_below(rng, parts)];
      return complete_multipartite_graph(sizes);
    }
    case Proposal::star:
      if (n < 2) return std::nullopt;
      return complete_multipartite_graph({1, n - 1});
    case Proposal::double_star: return double_star(n, rng);
    case Proposal::clique_star: return clique_star(n, rng);
    case Proposal::matched_cliques: return matched_cliques(n, rng);
    case Proposal::er_dense: {
      static constexpr double kP[] = {0.85, 0.70, 0.92, 0.60};
      return er_graph(n, kP[round % 4], rng);
    }
    case Proposal::er_sparse: {
      const double grid[] = {2.0 / n, 3.5 / n, 0.08, 1.2 / n};
      return er_graph(n, std::min(grid[round % 4], 0.95), rng);
    }
  }
  return std::nullopt;
}

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Graph petersen() {
  GraphBuilder b(10);
  for (int i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(5 + i, 5 + (i + 2) % 5);
    b.add_edge(i, i + 5);
  }
  return b.build();
}

Graph walther_b() {
  Graph p = petersen();
  GraphBuilder b(12);
  for (int i = 1; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j)
      if (p.adjacent(i, j)) b.add_edge(i - 1, j - 1);
  b.add_edge(0, 9);
  b.add_edge(3, 10);
  b.add_edge(4, 11);
  return b.build();
}

Graph walther_b_plus() {
  Graph base = walther_b();
  // Triangle corner that inherits the edge from u towards v: corners are
  // ordered by ascending neighbor.
  auto corner = [&](int u, int v) {
    int rank = 0;
    for (int w : base.neighbors(u))
      if (w < v) ++rank;
    return 3 * u + rank;
  };
  GraphBuilder b(30);
  for (int v = 0; v < 9; ++v) {
    b.add_edge(3 * v, 3 * v + 1);
    b.add_edge(3 * v, 3 * v + 2);
    b.add_edge(3 * v + 1, 3 * v + 2);
  }
  for (int u = 0; u < 12; ++u) {
    for (int v : base.neighbors(u)) {
      if (v < u) continue;
      int cu = u < 9 ? corner(u, v) : 27 + (u - 9);
      int cv = v < 9 ? corner(v, u) : 27 + (v - 9);
      b.add_edge(cu, cv);
    }
  }
  return b.build();
}

std::optional<Graph> random_class_graph(ClassLabel label, int n,
                                        uint64_t seed, int max_attempts) {
  if (n < 1 || n > 200)
    raise(Errc::unsupported_size,
          "random_class_graph supports 1..200 vertices");
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(
                          static_cast<uint64_t>(label) * 131 + n)));
  const auto& schedule = proposal_schedule(label);
  const Pattern& triangle = named_pattern("K3");
  const Pattern& k3p1 = named_pattern("K3+P1");
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Proposal kind = schedule[attempt % schedule.size()];
    int round = attempt / static_cast<int>(schedule.size());
    std::optional<Graph> cand = propose(kind, n, round, rng);
    if (!cand) continue;
    Graph g = repair_to_class(std::move(*cand), label, rng);
    if (g.vertex_count() != n || !is_connected(g)) continue;
    if (!in_class(g, label)) continue;
    // Keep the triangle route exact: beyond the oracle cutoff only accept
    // instances the finder can handle without it.
    if (label == ClassLabel::claw_k3_2p1 && n > kOracleFallbackMax &&
        !is_free(g, triangle) && !find_induced(g, k3p1))
      continue;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i)
      std::swap(perm[i], perm[rand_below(rng, i + 1)]);
    return relabel(g, perm);
  }
  return std::nullopt;
}

GrowPred class_grow_pred(ClassLabel label) {
  return [label](const SmallView& view, int added) {
    return in_class_small(view, label, added);
  };
}

GrowPred free_grow_pred(const std::vector<std::string>& pattern_names) {
  auto scanners = std::make_shared<std::vector<PatternScanner>>();
  for (const std::string& name : pattern_names)
    scanners->emplace_back(named_pattern(name));
  return [scanners](const SmallView& view, int added) {
    for (const PatternScanner& s : *scanners)
      if (s.contains_with(view, added)) return false;
    return true;
  };
}

namespace {

void sweep_levels(int n_max, bool connected_only, const GrowPred& pred,
                  const std::function<void(const Graph&)>& visit) {
  if (n_max < 1 || n_max > 10)
    raise(Errc::unsupported_size, "sweep supports 1..10 vertices");
  {
    uint16_t row = 0;
    if (pred && !pred(SmallView{1, &row}, 0)) return;
  }
  visit(GraphBuilder(1).build());
  std::vector<uint64_t> level{0};
  for (int k = 1; k < n_max && !level.empty(); ++k) {
    std::unordered_set<uint64_t> seen;
    std::vector<uint64_t> next;
    std::array<uint16_t, 16> rows{};
    for (uint64_t code : level) {
      Graph parent = graph_from_code(k, code);
      rows.fill(0);
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
          if (parent.adjacent(i, j)) {
            rows[i] |= static_cast<uint16_t>(1u << j);
            rows[j] |= static_cast<uint16_t>(1u << i);
          }
      uint32_t first = connected_only ? 1 : 0;
      for (uint32_t mask = first; mask < (1u << k); ++mask) {
        rows[k] = static_cast<uint16_t>(mask);
        for (uint32_t m = mask; m != 0; m &= m - 1)
          rows[std::countr_zero(m)] |= static_cast<uint16_t>(1u << k);
        bool keep = !pred || pred(SmallView{k + 1, rows.data()}, k);
        if (keep) {
          GraphBuilder b(k + 1);
          for (int i = 0; i <= k; ++i)
            for (int j = i + 1; j <= k; ++j)
              if (rows[i] & (1u << j)) b.add_edge(i, j);
          Graph child = b.build();
          uint64_t child_code = canonical_code(child);
          if (seen.insert(child_code).second) {
            visit(child);
            next.push_back(child_code);
          }
        }
        for (uint32_t m = mask; m != 0; m &= m - 1)
          rows[std::countr_zero(m)] &=
              static_cast<uint16_t>(~(1u << k));
      }
    }
    level = std::move(next);
  }
}

}  // namespace

void sweep_connected(int n_max, const GrowPred& pred,
                     const std::function<void(const Graph&)>& visit) {
  sweep_levels(n_max, true, pred, visit);
}

void sweep_all(int n_max, const GrowPred& pred,
               const std::function<void(const Graph&)>& visit) {
  sweep_levels(n_max, false, pred, visit);
}

void enumerate_connected(int n,
                         const std::function<void(const Graph&)>& visit) {
  if (n < 1 || n > 10)
    raise(Errc::unsupported_size, "enumeration supports 1..10 vertices");
  sweep_connected(n, {}, [&](const Graph& g) {
    if (g.vertex_count() == n) visit(g);
  });
}

}  // namespace gallai
