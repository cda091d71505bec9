#include "gallai/pattern.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>

namespace gallai {

namespace {

// One parsed term of the grammar: a base graph repeated `count` times.
struct Term {
  int count;
  std::vector<std::pair<int, int>> edges;  // within one copy, local ids
  int order;                               // vertices of one copy
};

int read_number(std::string_view text, size_t& pos) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data() + pos,
                                   text.data() + text.size(), value);
  if (ec != std::errc{} || ptr == text.data() + pos) return -1;
  pos = static_cast<size_t>(ptr - text.data());
  return value;
}

// Local edges of N_{i,j,k}: triangle 0,1,2 with a pendant path of length
// i, j, k hanging from each corner in turn.
Term net_term(int i, int j, int k) {
  Term t{1, {{0, 1}, {0, 2}, {1, 2}}, 3 + i + j + k};
  int next = 3;
  for (int corner = 0; corner < 3; ++corner) {
    int len = corner == 0 ? i : corner == 1 ? j : k;
    int prev = corner;
    for (int step = 0; step < len; ++step) {
      t.edges.push_back({prev, next});
      prev = next++;
    }
  }
  return t;
}

std::optional<Term> parse_term(std::string_view text, size_t& pos) {
  Term t{1, {}, 0};
  if (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
    t.count = read_number(text, pos);
    if (t.count < 1) return std::nullopt;
  }
  if (pos >= text.size()) return std::nullopt;

  auto word = [&](std::string_view w) {
    if (text.substr(pos, w.size()) != w) return false;
    pos += w.size();
    return true;
  };

  if (word("claw")) {
    t.order = 4;
    t.edges = {{0, 1}, {0, 2}, {0, 3}};
    return t;
  }
  if (word("triangle")) {
    t.order = 3;
    t.edges = {{0, 1}, {0, 2}, {1, 2}};
    return t;
  }
  if (word("paw")) {
    Term n = net_term(1, 0, 0);
    n.count = t.count;
    return n;
  }
  if (word("diamond")) {
    t.order = 4;
    t.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
    return t;
  }
  if (word("bull")) {
    Term n = net_term(1, 1, 0);
    n.count = t.count;
    return n;
  }
  if (word("N_{")) {
    int i = read_number(text, pos);
    if (i < 0 || !word(",")) return std::nullopt;
    int j = read_number(text, pos);
    if (j < 0 || !word(",")) return std::nullopt;
    int k = read_number(text, pos);
    if (k < 0 || !word("}")) return std::nullopt;
    Term n = net_term(i, j, k);
    n.count = t.count;
    return n;
  }

  char kind = text[pos];
  if (kind != 'P' && kind != 'C' && kind != 'K') return std::nullopt;
  ++pos;
  int k = read_number(text, pos);
  if (k < 1) return std::nullopt;
  t.order = k;
  if (kind == 'P') {
    for (int v = 1; v < k; ++v) t.edges.push_back({v - 1, v});
  } else if (kind == 'C') {
    if (k < 3) return std::nullopt;
    for (int v = 1; v < k; ++v) t.edges.push_back({v - 1, v});
    t.edges.push_back({0, k - 1});
  } else {
    for (int u = 0; u < k; ++u)
      for (int v = u + 1; v < k; ++v) t.edges.push_back({u, v});
  }
  return t;
}

}  // namespace

Pattern named_pattern(std::string_view name) {
  std::vector<Term> terms;
  size_t pos = 0;
  while (true) {
    auto term = parse_term(name, pos);
    if (!term)
      raise(Errc::unknown_pattern, "'" + std::string(name) + "'");
    terms.push_back(*term);
    if (pos == name.size()) break;
    if (name[pos] != '+')
      raise(Errc::unknown_pattern, "'" + std::string(name) + "'");
    ++pos;
  }

  int total = 0;
  for (const Term& t : terms) total += t.count * t.order;
  if (total < 1 || total > 9)
    raise(Errc::unknown_pattern,
          "'" + std::string(name) + "' has order " + std::to_string(total) +
              ", supported range is 1..9");

  Pattern p;
  p.name = std::string(name);
  GraphBuilder builder(total);
  int base = 0;
  for (const Term& t : terms)
    for (int copy = 0; copy < t.count; ++copy) {
      std::vector<int>& comp = p.components.emplace_back(t.order);
      std::iota(comp.begin(), comp.end(), base);
      for (auto [u, v] : t.edges) builder.add_edge(base + u, base + v);
      base += t.order;
    }
  p.shape = builder.build();
  return p;
}

namespace {

struct EmbedSearch {
  const Graph& g;
  const Pattern& p;
  int k;
  int words;
  std::vector<std::vector<int>> prev_adj, prev_non;
  std::vector<int> pdeg;
  std::vector<int> map;
  std::vector<uint64_t> used;
  std::vector<uint64_t> cand;  // k rows of `words` words each

  EmbedSearch(const Graph& graph, const Pattern& pattern)
      : g(graph),
        p(pattern),
        k(pattern.shape.vertex_count()),
        words(graph.words()),
        prev_adj(k),
        prev_non(k),
        pdeg(k),
        map(k, -1),
        used(words, 0),
        cand(static_cast<size_t>(k) * words, 0) {
    for (int b = 0; b < k; ++b) {
      pdeg[b] = p.shape.degree(b);
      for (int a = 0; a < b; ++a)
        (p.shape.adjacent(a, b) ? prev_adj : prev_non)[b].push_back(a);
    }
  }

  bool extend(int pos) {
    if (pos == k) return true;
    uint64_t* row = cand.data() + static_cast<size_t>(pos) * words;
    int n = g.vertex_count();
    for (int w = 0; w < words; ++w) row[w] = ~uint64_t{0};
    if (n & 63) row[words - 1] = (uint64_t{1} << (n & 63)) - 1;
    for (int q : prev_adj[pos]) {
      auto nb = g.row(map[q]);
      for (int w = 0; w < words; ++w) row[w] &= nb[w];
    }
    for (int q : prev_non[pos]) {
      auto nb = g.row(map[q]);
      for (int w = 0; w < words; ++w) row[w] &= ~nb[w];
    }
    for (int w = 0; w < words; ++w) row[w] &= ~used[w];

    // Ascending-bit iteration keeps the full tuple lexicographically
    // least: the first completed assignment wins.
    for (int w = 0; w < words; ++w) {
      uint64_t bits = row[w];
      while (bits) {
        int v = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        if (g.degree(v) < pdeg[pos]) continue;
        map[pos] = v;
        used[v >> 6] |= uint64_t{1} << (v & 63);
        if (extend(pos + 1)) return true;
        used[v >> 6] &= ~(uint64_t{1} << (v & 63));
      }
    }
    map[pos] = -1;
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_induced(const Graph& g,
                                             const Pattern& p) {
  if (p.shape.vertex_count() > g.vertex_count()) return std::nullopt;
  if (p.shape.vertex_count() == 0) return std::vector<int>{};
  EmbedSearch search(g, p);
  if (!search.extend(0)) return std::nullopt;
  return search.map;
}

bool is_free(const Graph& g, const Pattern& p) {
  return !find_induced(g, p).has_value();
}

namespace {

bool isomorphic_small(const Graph& a, const Graph& b) {
  int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count())
    return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (a.adjacent(u, v) != b.adjacent(perm[u], perm[v])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool is_linear_forest(const Graph& g) {
  if (g.max_degree() > 2) return false;
  // Degree <= 2 and no cycles means every component is a path.
  int components = static_cast<int>(connected_components(g).size());
  return g.edge_count() == g.vertex_count() - components;
}

}  // namespace

bool gallai_family_lookup(const Pattern& h) {
  if (h.shape.vertex_count() > 5)
    raise(Errc::pattern_too_large,
          "classification covers patterns up to 5 vertices, '" + h.name +
              "' has " + std::to_string(h.shape.vertex_count()));
  if (is_linear_forest(h.shape)) return true;
  static const std::array<const char*, 5> kFamilies = {
      "bull", "K3+2P1", "N_{2,0,0}", "paw+P1", "K3+P2"};
  for (const char* name : kFamilies)
    if (isomorphic_small(h.shape, named_pattern(name).shape)) return true;
  return false;
}

const char* class_name(ClassLabel label) {
  switch (label) {
    case ClassLabel::claw_p3_2p1: return "claw-p3-2p1";
    case ClassLabel::claw_k3_2p1: return "claw-k3-2p1";
    case ClassLabel::claw_2p2_p1: return "claw-2p2-p1";
    case ClassLabel::claw_p2_3p1: return "claw-p2-3p1";
    case ClassLabel::p5_triangle: return "p5-triangle";
    case ClassLabel::p5_paw: return "p5-paw";
    case ClassLabel::p5_diamond: return "p5-diamond";
  }
  return "?";
}

std::optional<ClassLabel> class_from_name(std::string_view name) {
  for (ClassLabel label : kAllClassLabels)
    if (name == class_name(label)) return label;
  return std::nullopt;
}

const std::array<Pattern, 2>& class_patterns(ClassLabel label) {
  static const std::array<std::array<Pattern, 2>, 7> kTable = [] {
    auto pair = [](const char* a, const char* b) {
      return std::array<Pattern, 2>{named_pattern(a), named_pattern(b)};
    };
    return std::array<std::array<Pattern, 2>, 7>{
        pair("claw", "P3+2P1"), pair("claw", "K3+2P1"),
        pair("claw", "2P2+P1"), pair("claw", "P2+3P1"),
        pair("P5", "triangle"), pair("P5", "paw"),
        pair("P5", "diamond")};
  }();
  return kTable[static_cast<size_t>(label)];
}

bool in_class(const Graph& g, ClassLabel label) {
  const auto& pair = class_patterns(label);
  return is_free(g, pair[0]) && is_free(g, pair[1]);
}

PatternScanner::PatternScanner(const Pattern& p)
    : s_(p.shape.vertex_count()) {
  if (s_ < 1 || s_ > 5)
    raise(Errc::pattern_too_large,
          "subset scanner handles 1..5 vertices, '" + p.name + "' has " +
              std::to_string(s_));
  std::vector<int> perm(s_);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int code = 0;
    for (int j = 1; j < s_; ++j)
      for (int i = 0; i < j; ++i)
        if (p.shape.adjacent(perm[i], perm[j]))
          code |= 1 << (j * (j - 1) / 2 + i);
    iso_[code >> 6] |= uint64_t{1} << (code & 63);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

bool PatternScanner::code_hit(const int* subset,
                              const SmallView& view) const {
  int code = 0;
  for (int j = 1; j < s_; ++j)
    for (int i = 0; i < j; ++i)
      if (view.adjacent(subset[i], subset[j]))
        code |= 1 << (j * (j - 1) / 2 + i);
  return (iso_[code >> 6] >> (code & 63)) & 1u;
}

bool PatternScanner::contains(const SmallView& view) const {
  if (view.n < s_) return false;
  int subset[5];
  // Ascending s-subsets of 0..n-1 by manual odometer.
  for (int i = 0; i < s_; ++i) subset[i] = i;
  while (true) {
    if (code_hit(subset, view)) return true;
    int i = s_ - 1;
    while (i >= 0 && subset[i] == view.n - s_ + i) --i;
    if (i < 0) return false;
    ++subset[i];
    for (int j = i + 1; j < s_; ++j) subset[j] = subset[j - 1] + 1;
  }
}

bool PatternScanner::contains_with(const SmallView& view,
                                   int forced) const {
  if (view.n < s_) return false;
  // Odometer over (s-1)-subsets of the other vertices; pick[i] indexes the
  // universe with `forced` removed, so it maps to pick[i] or pick[i]+1.
  int m = view.n - 1;
  int rest = s_ - 1;
  int pick[5];
  for (int i = 0; i < rest; ++i) pick[i] = i;
  int subset[5];
  while (true) {
    int at = 0;
    bool placed = false;
    for (int i = 0; i < rest; ++i) {
      int v = pick[i] < forced ? pick[i] : pick[i] + 1;
      if (!placed && forced < v) {
        subset[at++] = forced;
        placed = true;
      }
      subset[at++] = v;
    }
    if (!placed) subset[at] = forced;
    if (code_hit(subset, view)) return true;
    int i = rest - 1;
    while (i >= 0 && pick[i] == m - rest + i) --i;
    if (i < 0) return false;
    ++pick[i];
    for (int j = i + 1; j < rest; ++j) pick[j] = pick[j - 1] + 1;
  }
}

bool in_class_small(const SmallView& view, ClassLabel label, int added) {
  static const std::array<std::array<PatternScanner, 2>, 7> kScanners = [] {
    auto make = [](ClassLabel l) {
      const auto& pair = class_patterns(l);
      return std::array<PatternScanner, 2>{PatternScanner(pair[0]),
                                           PatternScanner(pair[1])};
    };
    return std::array<std::array<PatternScanner, 2>, 7>{
        make(ClassLabel::claw_p3_2p1), make(ClassLabel::claw_k3_2p1),
        make(ClassLabel::claw_2p2_p1), make(ClassLabel::claw_p2_3p1),
        make(ClassLabel::p5_triangle), make(ClassLabel::p5_paw),
        make(ClassLabel::p5_diamond)};
  }();
  const auto& pair = kScanners[static_cast<size_t>(label)];
  return !pair[0].contains_with(view, added) &&
         !pair[1].contains_with(view, added);
}

}  // namespace gallai
