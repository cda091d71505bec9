#include "gallai/oracle.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace gallai {

namespace {

// Shared state of the path DFS. Bitsets are g.words() wide.
struct PathSearch {
  const Graph& g;
  int n, words;
  std::vector<uint64_t> visited;
  std::vector<int> seq;
  std::vector<uint64_t> scratch;  // reach + frontier + next per depth

  explicit PathSearch(const Graph& graph)
      : g(graph),
        n(graph.vertex_count()),
        words(graph.words()),
        visited(graph.words(), 0),
        scratch(static_cast<size_t>(3) * graph.words()) {}

  // Vertices still reachable from `tip` through unvisited vertices,
  // tip excluded. Upper-bounds how much the current path can grow.
  int reachable_from(int tip) {
    uint64_t* reach = scratch.data();
    uint64_t* frontier = reach + words;
    uint64_t* next = frontier + words;
    auto tip_row = g.row(tip);
    for (int w = 0; w < words; ++w) {
      reach[w] = 0;
      frontier[w] = tip_row[w] & ~visited[w];
    }
    while (true) {
      bool any = false;
      for (int w = 0; w < words; ++w) {
        reach[w] |= frontier[w];
        next[w] = 0;
        any = any || frontier[w];
      }
      if (!any) break;
      for (int w = 0; w < words; ++w) {
        uint64_t bits = frontier[w];
        while (bits) {
          int v = w * 64 + std::countr_zero(bits);
          bits &= bits - 1;
          auto row = g.row(v);
          for (int x = 0; x < words; ++x) next[x] |= row[x];
        }
      }
      for (int w = 0; w < words; ++w)
        frontier[w] = next[w] & ~visited[w] & ~reach[w];
    }
    int count = 0;
    for (int w = 0; w < words; ++w) count += std::popcount(reach[w]);
    return count;
  }

  void mark(int v, bool on) {
    if (on)
      visited[v >> 6] |= uint64_t{1} << (v & 63);
    else
      visited[v >> 6] &= ~(uint64_t{1} << (v & 63));
  }
};

// Pass 1: maximize path length only.
struct LengthSearch : PathSearch {
  int best = 0;

  using PathSearch::PathSearch;

  void grow(int tip, int len) {
    best = std::max(best, len);
    if (len + reachable_from(tip) <= best) return;
    for (int v = 0; v < n; ++v) {
      if (!g.adjacent(tip, v)) continue;
      if ((visited[v >> 6] >> (v & 63)) & 1u) continue;
      mark(v, true);
      grow(v, len + 1);
      mark(v, false);
    }
  }

  int run() {
    for (int s = 0; s < n; ++s) {
      mark(s, true);
      grow(s, 1);
      mark(s, false);
    }
    return best;
  }
};

// Pass 2: emit every path of exactly `target` vertices once (canonical
// orientation start < end filters the duplicate traversal).
struct EmitSearch : PathSearch {
  int target;
  uint64_t budget;
  const std::function<void(const std::vector<int>&)>& visit;
  uint64_t count = 0;
  bool truncated = false;

  EmitSearch(const Graph& graph, int target_len, uint64_t path_budget,
             const std::function<void(const std::vector<int>&)>& v)
      : PathSearch(graph), target(target_len), budget(path_budget),
        visit(v) {}

  // Returns false once the budget tripped; callers unwind immediately.
  bool grow(int tip) {
    int len = static_cast<int>(seq.size());
    if (len == target) {
      if (target > 1 && seq.front() > seq.back()) return true;
      if (count == budget) {
        truncated = true;
        return false;
      }
      ++count;
      visit(seq);
      return true;
    }
    if (len + reachable_from(tip) < target) return true;
    for (int v = 0; v < n; ++v) {
      if (!g.adjacent(tip, v)) continue;
      if ((visited[v >> 6] >> (v & 63)) & 1u) continue;
      mark(v, true);
      seq.push_back(v);
      bool keep_going = grow(v);
      seq.pop_back();
      mark(v, false);
      if (!keep_going) return false;
    }
    return true;
  }

  void run() {
    for (int s = 0; s < n; ++s) {
      mark(s, true);
      seq.assign(1, s);
      bool keep_going = grow(s);
      seq.clear();
      mark(s, false);
      if (!keep_going) return;
    }
  }
};

}  // namespace

int longest_path_length(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  LengthSearch search(g);
  return search.run();
}

EnumerationStats enumerate_longest_paths(
    const Graph& g, uint64_t path_budget,
    const std::function<void(const std::vector<int>&)>& visit) {
  EnumerationStats stats;
  stats.length = longest_path_length(g);
  if (stats.length == 0) return stats;
  EmitSearch search(g, stats.length, path_budget, visit);
  search.run();
  stats.path_count = search.count;
  stats.truncated = search.truncated;
  return stats;
}

LongestPathReport longest_path_report(const Graph& g, uint64_t path_budget,
                                      uint64_t retention) {
  LongestPathReport report;
  int words = g.words();
  std::vector<uint64_t> meet(words, ~uint64_t{0});
  std::vector<uint64_t> current(words);
  auto stats = enumerate_longest_paths(
      g, path_budget, [&](const std::vector<int>& seq) {
        std::fill(current.begin(), current.end(), 0);
        for (int v : seq) current[v >> 6] |= uint64_t{1} << (v & 63);
        for (int w = 0; w < words; ++w) meet[w] &= current[w];
        if (report.paths.size() < retention)
          report.paths.push_back(Path{seq});
      });
  report.length = stats.length;
  report.path_count = stats.path_count;
  report.truncated = stats.truncated;
  if (stats.path_count > 0)
    for (int v = 0; v < g.vertex_count(); ++v)
      if ((meet[v >> 6] >> (v & 63)) & 1u) report.gallai_set.push_back(v);
  return report;
}

VertexSet gallai_vertices(const Graph& g) {
  if (!is_connected(g))
    raise(Errc::disconnected, "Gallai set asks for a connected graph");
  return longest_path_report(g, ~uint64_t{0}, 0).gallai_set;
}

VertexSet gallai_vertices_by_deletion(const Graph& g) {
  if (!is_connected(g))
    raise(Errc::disconnected, "Gallai set asks for a connected graph");
  int n = g.vertex_count();
  int full = longest_path_length(g);
  VertexSet out;
  VertexSet keep(n - 1);
  for (int v = 0; v < n; ++v) {
    int at = 0;
    for (int u = 0; u < n; ++u)
      if (u != v) keep[at++] = u;
    if (longest_path_length(induced_subgraph(g, keep)) < full)
      out.push_back(v);
  }
  return out;
}

bool is_gallai_vertex(const Graph& g, int v) {
  int n = g.vertex_count();
  VertexSet keep;
  keep.reserve(n - 1);
  for (int u = 0; u < n; ++u)
    if (u != v) keep.push_back(u);
  return longest_path_length(induced_subgraph(g, keep)) <
         longest_path_length(g);
}

bool has_hamiltonian_path(const Graph& g) {
  return longest_path_length(g) == g.vertex_count();
}

namespace {

bool cycle_dfs(const Graph& g, int tip, int len,
               std::vector<bool>& visited) {
  int n = g.vertex_count();
  if (len == n) return g.adjacent(tip, 0);
  for (int v = 1; v < n; ++v) {
    if (visited[v] || !g.adjacent(tip, v)) continue;
    visited[v] = true;
    if (cycle_dfs(g, v, len + 1, visited)) return true;
    visited[v] = false;
  }
  return false;
}

}  // namespace

bool has_hamiltonian_cycle(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return false;
  if (n == 1) return true;
  if (n == 2) return false;
  // Every Hamiltonian cycle passes vertex 0, so root the search there.
  std::vector<bool> visited(n, false);
  visited[0] = true;
  return cycle_dfs(g, 0, 1, visited);
}

std::optional<VertexSet> min_transversal(const Graph& g, int k_max) {
  if (!is_connected(g))
    raise(Errc::disconnected, "transversal asks for a connected graph");
  int n = g.vertex_count();
  if (n == 0) return VertexSet{};
  int words = g.words();

  // Distinct vertex sets of longest paths; different paths on the same
  // vertices impose the same constraint.
  std::set<std::vector<uint64_t>> path_sets;
  std::vector<uint64_t> current(words);
  enumerate_longest_paths(g, ~uint64_t{0},
                          [&](const std::vector<int>& seq) {
                            std::fill(current.begin(), current.end(), 0);
                            for (int v : seq)
                              current[v >> 6] |= uint64_t{1} << (v & 63);
                            path_sets.insert(current);
                          });

  auto hits_all = [&](const VertexSet& chosen) {
    for (const auto& set : path_sets) {
      bool hit = false;
      for (int v : chosen)
        if ((set[v >> 6] >> (v & 63)) & 1u) {
          hit = true;
          break;
        }
      if (!hit) return false;
    }
    return true;
  };

  VertexSet chosen;
  // Lexicographically first k-subset that meets every set, smallest k
  // first.
  std::function<std::optional<VertexSet>(int, int)> pick =
      [&](int k, int from) -> std::optional<VertexSet> {
    if (static_cast<int>(chosen.size()) == k) {
      if (hits_all(chosen)) return chosen;
      return std::nullopt;
    }
    for (int v = from; v < n; ++v) {
      chosen.push_back(v);
      if (auto found = pick(k, v + 1)) return found;
      chosen.pop_back();
    }
    return std::nullopt;
  };
  for (int k = 1; k <= k_max; ++k)
    if (auto found = pick(k, 0)) return found;
  return std::nullopt;
}

}  // namespace gallai
