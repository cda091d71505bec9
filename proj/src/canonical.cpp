#include "gallai/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>

namespace gallai {

namespace {

constexpr int kCanonMax = 11;
constexpr uint16_t kColumnSentinel = 0xFFFF;  // larger than any real column

// Iterated neighborhood-color refinement. The resulting class indices are
// functions of graph structure only (classes are keyed and re-numbered by
// signature, never by vertex id), so isomorphic graphs color corresponding
// vertices identically.
std::vector<int> refine_colors(int n, const std::array<uint16_t, 11>& rows) {
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v) color[v] = std::popcount(rows[v]);
  int classes = 0;
  {
    std::map<int, int> remap;
    for (int v = 0; v < n; ++v) remap.emplace(color[v], 0);
    for (auto& [key, idx] : remap) idx = classes++;
    for (int v = 0; v < n; ++v) color[v] = remap[color[v]];
  }
  while (true) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<int> around;
      for (int u = 0; u < n; ++u)
        if ((rows[v] >> u) & 1u) around.push_back(color[u]);
      std::sort(around.begin(), around.end());
      sig[v].insert(sig[v].end(), around.begin(), around.end());
    }
    std::map<std::vector<int>, int> remap;
    for (int v = 0; v < n; ++v) remap.emplace(sig[v], 0);
    int next = 0;
    for (auto& [key, idx] : remap) idx = next++;
    for (int v = 0; v < n; ++v) color[v] = remap[sig[v]];
    if (next == classes) break;
    classes = next;
  }
  return color;
}

struct CanonSearch {
  int n;
  std::array<uint16_t, 11> rows{};
  std::vector<int> color;      // refined class of each vertex
  std::vector<int> slot_color; // class required at each position
  std::array<uint16_t, 11> best{};
  std::array<int, 11> perm{};
  uint16_t used = 0;

  // Invariant on entry: columns 0..p-1 of the current assignment equal
  // best[0..p-1]. A strictly smaller column overwrites the incumbent tail
  // with sentinels, so the first completion through it becomes the new
  // incumbent and later candidates keep being compared against it.
  void place(int p) {
    if (p == n) return;
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1u) continue;
      if (color[v] != slot_color[p]) continue;
      uint16_t column = 0;
      for (int i = 0; i < p; ++i)
        if ((rows[v] >> perm[i]) & 1u) column |= uint16_t(1u << i);
      if (column > best[p]) continue;
      if (column < best[p]) {
        best[p] = column;
        for (int q = p + 1; q < n; ++q) best[q] = kColumnSentinel;
      }
      perm[p] = v;
      used |= uint16_t(1u << v);
      place(p + 1);
      used &= uint16_t(~(1u << v));
    }
  }
};

}  // namespace

uint64_t canonical_code(const Graph& g) {
  int n = g.vertex_count();
  if (n > kCanonMax)
    raise(Errc::unsupported_size,
          "canonical form handles up to " + std::to_string(kCanonMax) +
              " vertices, got " + std::to_string(n));
  if (n <= 1) return 0;

  CanonSearch search;
  search.n = n;
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u)
      if (u != v && g.adjacent(u, v))
        search.rows[v] |= uint16_t(1u << u);
  search.color = refine_colors(n, search.rows);
  search.slot_color = search.color;
  std::sort(search.slot_color.begin(), search.slot_color.end());
  search.best.fill(kColumnSentinel);
  search.place(0);

  uint64_t code = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if ((search.best[j] >> i) & 1u)
        code |= uint64_t{1} << (j * (j - 1) / 2 + i);
  return code;
}

Graph graph_from_code(int n, uint64_t code) {
  GraphBuilder builder(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if ((code >> (j * (j - 1) / 2 + i)) & 1u) builder.add_edge(i, j);
  return builder.build();
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  if (a.edge_count() != b.edge_count()) return false;
  return canonical_code(a) == canonical_code(b);
}

}  // namespace gallai
