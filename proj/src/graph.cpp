#include "gallai/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

namespace gallai {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::malformed_record: return "MalformedRecord";
    case Errc::unsupported_size: return "UnsupportedSize";
    case Errc::self_loop: return "SelfLoop";
    case Errc::duplicate_edge: return "DuplicateEdge";
    case Errc::vertex_out_of_range: return "VertexOutOfRange";
    case Errc::unknown_pattern: return "UnknownPattern";
    case Errc::pattern_too_large: return "PatternTooLarge";
    case Errc::not_in_class: return "NotInClass";
    case Errc::disconnected: return "Disconnected";
    case Errc::structure_violation: return "StructureViolation";
    case Errc::precondition_c5: return "PreconditionC5";
  }
  return "UnknownError";
}

int Graph::edge_count() const {
  int total = 0;
  for (uint64_t word : bits_) total += std::popcount(word);
  return total / 2;
}

int Graph::degree(int v) const {
  int d = 0;
  for (uint64_t word : row(v)) d += std::popcount(word);
  return d;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

VertexSet Graph::neighbors(int v) const {
  VertexSet out;
  for (int u = 0; u < n_; ++u)
    if (adjacent(v, u)) out.push_back(u);
  return out;
}

GraphBuilder::GraphBuilder(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    raise(Errc::unsupported_size,
          "vertex count " + std::to_string(n) + " outside 0.." +
              std::to_string(kMaxVertices));
  w_ = (n + 63) / 64;
  if (w_ == 0) w_ = 1;
  bits_.assign(static_cast<size_t>(n_) * w_, 0);
}

bool GraphBuilder::has_edge(int u, int v) const {
  return (bits_[static_cast<size_t>(u) * w_ + (v >> 6)] >> (v & 63)) & 1u;
}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    raise(Errc::vertex_out_of_range,
          "edge (" + std::to_string(u) + "," + std::to_string(v) +
              ") on " + std::to_string(n_) + " vertices");
  if (u == v)
    raise(Errc::self_loop, "loop at vertex " + std::to_string(u));
  if (has_edge(u, v))
    raise(Errc::duplicate_edge,
          "edge (" + std::to_string(u) + "," + std::to_string(v) +
              ") repeated");
  bits_[static_cast<size_t>(u) * w_ + (v >> 6)] |= uint64_t{1} << (v & 63);
  bits_[static_cast<size_t>(v) * w_ + (u >> 6)] |= uint64_t{1} << (u & 63);
  return *this;
}

Graph GraphBuilder::build() const {
  Graph g;
  g.n_ = n_;
  g.w_ = w_;
  g.bits_ = bits_;
  return g;
}

Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader)
    text.remove_prefix(kHeader.size());
  if (text.empty())
    raise(Errc::malformed_record, "empty graph6 record");

  int size_byte = static_cast<unsigned char>(text[0]);
  if (size_byte < 63 || size_byte > 125)
    raise(Errc::malformed_record,
          "graph6 size byte " + std::to_string(size_byte) +
              " outside 63..125");
  int n = size_byte - 63;
  text.remove_prefix(1);

  int pair_count = n * (n - 1) / 2;
  size_t body_len = (static_cast<size_t>(pair_count) + 5) / 6;
  if (text.size() != body_len)
    raise(Errc::malformed_record,
          "graph6 body for n=" + std::to_string(n) + " needs " +
              std::to_string(body_len) + " bytes, got " +
              std::to_string(text.size()));

  GraphBuilder builder(n);
  int bit_index = 0;
  for (char c : text) {
    int value = static_cast<unsigned char>(c);
    if (value < 63 || value > 126)
      raise(Errc::malformed_record,
            "graph6 body byte " + std::to_string(value) +
                " outside 63..126");
    value -= 63;
    for (int k = 5; k >= 0; --k, ++bit_index) {
      bool bit = (value >> k) & 1;
      if (bit_index >= pair_count) {
        if (bit)
          raise(Errc::malformed_record, "nonzero graph6 padding bits");
        continue;
      }
      if (!bit) continue;
      // Bits run through the upper triangle column by column: pair t
      // belongs to column j where t = j(j-1)/2 + i, 0 <= i < j.
      int j = 1;
      while ((j + 1) * j / 2 <= bit_index) ++j;
      int i = bit_index - j * (j - 1) / 2;
      builder.add_edge(i, j);
    }
  }
  return builder.build();
}

std::string to_graph6(const Graph& g) {
  int n = g.vertex_count();
  if (n > 62)
    raise(Errc::unsupported_size,
          "graph6 output limited to 62 vertices, got " + std::to_string(n));
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int acc = 0;
  int acc_bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++acc_bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        acc_bits = 0;
      }
    }
  }
  if (acc_bits > 0)
    out.push_back(static_cast<char>((acc << (6 - acc_bits)) + 63));
  return out;
}

namespace {

int parse_int_token(std::istringstream& in, const char* what) {
  std::string token;
  if (!(in >> token))
    raise(Errc::malformed_record, std::string("missing ") + what);
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    raise(Errc::malformed_record,
          std::string("bad ") + what + " '" + token + "'");
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  int n = parse_int_token(in, "vertex count");
  int m = parse_int_token(in, "edge count");
  if (n < 0 || m < 0)
    raise(Errc::malformed_record, "negative count in edge list header");
  GraphBuilder builder(n);
  for (int e = 0; e < m; ++e) {
    int u = parse_int_token(in, "edge endpoint");
    int v = parse_int_token(in, "edge endpoint");
    builder.add_edge(u, v);
  }
  std::string trailing;
  if (in >> trailing)
    raise(Errc::malformed_record,
          "unexpected token '" + trailing + "' after " + std::to_string(m) +
              " edges");
  return builder.build();
}

std::vector<VertexSet> connected_components(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> label(n, -1);
  std::vector<VertexSet> parts;
  std::vector<int> stack;
  for (int start = 0; start < n; ++start) {
    if (label[start] != -1) continue;
    int id = static_cast<int>(parts.size());
    parts.emplace_back();
    label[start] = id;
    stack.push_back(start);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      parts[id].push_back(v);
      for (int u = 0; u < n; ++u)
        if (g.adjacent(v, u) && label[u] == -1) {
          label[u] = id;
          stack.push_back(u);
        }
    }
  }
  for (auto& part : parts) std::sort(part.begin(), part.end());
  return parts;
}

bool is_connected(const Graph& g) {
  return connected_components(g).size() <= 1;
}

std::vector<VertexSet> components_excluding(const Graph& g,
                                            const VertexSet& removed) {
  int n = g.vertex_count();
  std::vector<int> label(n, -1);
  for (int v : removed) label[v] = -2;
  std::vector<VertexSet> parts;
  std::vector<int> stack;
  for (int start = 0; start < n; ++start) {
    if (label[start] != -1) continue;
    int id = static_cast<int>(parts.size());
    parts.emplace_back();
    label[start] = id;
    stack.push_back(start);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      parts[id].push_back(v);
      for (int u = 0; u < n; ++u)
        if (g.adjacent(v, u) && label[u] == -1) {
          label[u] = id;
          stack.push_back(u);
        }
    }
  }
  for (auto& part : parts) std::sort(part.begin(), part.end());
  return parts;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j)
      if (!g.adjacent(s[i], s[j])) return false;
  return true;
}

namespace {

struct CutVertexDfs {
  const Graph& g;
  std::vector<int> order, low, parent;
  std::vector<bool> is_cut;
  int timer = 0;

  explicit CutVertexDfs(const Graph& graph)
      : g(graph),
        order(graph.vertex_count(), -1),
        low(graph.vertex_count(), 0),
        parent(graph.vertex_count(), -1),
        is_cut(graph.vertex_count(), false) {}

  void run(int root) {
    // Iterative Tarjan lowpoint walk; (v, next neighbor to try) frames.
    std::vector<std::pair<int, int>> frames{{root, 0}};
    order[root] = low[root] = timer++;
    int root_children = 0;
    while (!frames.empty()) {
      auto& [v, next] = frames.back();
      if (next < g.vertex_count()) {
        int u = next++;
        if (!g.adjacent(v, u) || u == parent[v]) continue;
        if (order[u] == -1) {
          parent[u] = v;
          if (v == root) ++root_children;
          order[u] = low[u] = timer++;
          frames.push_back({u, 0});
        } else {
          low[v] = std::min(low[v], order[u]);
        }
      } else {
        int done = v;
        frames.pop_back();
        if (frames.empty()) break;
        int p = frames.back().first;
        low[p] = std::min(low[p], low[done]);
        if (p != root && low[done] >= order[p]) is_cut[p] = true;
      }
    }
    if (root_children >= 2) is_cut[root] = true;
  }
};

}  // namespace

VertexSet cut_vertices(const Graph& g) {
  CutVertexDfs dfs(g);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (dfs.order[v] == -1) dfs.run(v);
  VertexSet out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (dfs.is_cut[v]) out.push_back(v);
  return out;
}

int lowest_max_degree_vertex(const Graph& g) {
  int best = 0;
  for (int v = 1; v < g.vertex_count(); ++v)
    if (g.degree(v) > g.degree(best)) best = v;
  return best;
}

int heavier_endpoint(const Graph& g, int u, int v) {
  int du = g.degree(u), dv = g.degree(v);
  if (du != dv) return du > dv ? u : v;
  return std::min(u, v);
}

bool is_dominating(const Graph& g, const VertexSet& s) {
  int n = g.vertex_count();
  std::vector<bool> hit(n, false);
  for (int v : s) {
    hit[v] = true;
    for (int u = 0; u < n; ++u)
      if (g.adjacent(v, u)) hit[u] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::optional<std::vector<int>> is_bipartite(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> color(n, -1);
  std::vector<int> queue;
  for (int start = 0; start < n; ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    queue.assign(1, start);
    for (size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for (int u = 0; u < n; ++u) {
        if (!g.adjacent(v, u)) continue;
        if (color[u] == -1) {
          color[u] = 1 - color[v];
          queue.push_back(u);
        } else if (color[u] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

std::optional<std::vector<VertexSet>> complete_multipartite_parts(
    const Graph& g) {
  Graph co = complement(g);
  std::vector<VertexSet> parts = connected_components(co);
  for (const auto& part : parts)
    for (size_t a = 0; a < part.size(); ++a)
      for (size_t b = a + 1; b < part.size(); ++b)
        if (g.adjacent(part[a], part[b])) return std::nullopt;
  return parts;
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  GraphBuilder builder(static_cast<int>(keep.size()));
  for (size_t a = 0; a < keep.size(); ++a)
    for (size_t b = a + 1; b < keep.size(); ++b)
      if (g.adjacent(keep[a], keep[b]))
        builder.add_edge(static_cast<int>(a), static_cast<int>(b));
  return builder.build();
}

Graph complement(const Graph& g) {
  int n = g.vertex_count();
  GraphBuilder builder(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) builder.add_edge(u, v);
  return builder.build();
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  int n = g.vertex_count();
  if (static_cast<int>(perm.size()) != n)
    raise(Errc::vertex_out_of_range, "relabel permutation has wrong length");
  std::vector<bool> seen(n, false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[p])
      raise(Errc::vertex_out_of_range, "relabel map is not a permutation");
    seen[p] = true;
  }
  GraphBuilder builder(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.adjacent(u, v)) builder.add_edge(perm[u], perm[v]);
  return builder.build();
}

}  // namespace gallai
