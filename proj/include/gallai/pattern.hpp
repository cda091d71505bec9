#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gallai/graph.hpp"

namespace gallai {

// A named forbidden subgraph. Vertices are numbered in construction order,
// component by component, so every prefix of a component is connected; the
// detection search relies on that ordering.
struct Pattern {
  std::string name;
  Graph shape;
  std::vector<std::vector<int>> components;
};

// Accepts the pattern grammar: one or more '+'-separated terms, each an
// optionally repeated base name. Bases: P<k>, C<k> (k >= 3), K<k>, claw,
// triangle, paw, diamond, bull, N_{i,j,k}. Examples: "P5", "2P2+P1",
// "N_{1,1,0}". Total order is capped at 9; anything else ->
// UnknownPattern.
Pattern named_pattern(std::string_view name);

// Lexicographically least tuple (map[0..k-1]) over the pattern's
// construction order such that the mapped vertices induce a copy of p
// (edges and non-edges both preserved). nullopt iff g is p-free.
std::optional<std::vector<int>> find_induced(const Graph& g,
                                             const Pattern& p);

bool is_free(const Graph& g, const Pattern& p);

// True iff h (order <= 5, else PatternTooLarge) is a linear forest or
// isomorphic to one of bull, K3+2P1, N_{2,0,0}, paw+P1, K3+P2.
bool gallai_family_lookup(const Pattern& h);

enum class ClassLabel {
  claw_p3_2p1,
  claw_k3_2p1,
  claw_2p2_p1,
  claw_p2_3p1,
  p5_triangle,
  p5_paw,
  p5_diamond,
};

inline constexpr std::array<ClassLabel, 7> kAllClassLabels = {
    ClassLabel::claw_p3_2p1, ClassLabel::claw_k3_2p1,
    ClassLabel::claw_2p2_p1, ClassLabel::claw_p2_3p1,
    ClassLabel::p5_triangle, ClassLabel::p5_paw,
    ClassLabel::p5_diamond};

// CLI identifier, e.g. "claw-p3-2p1", "p5-triangle".
const char* class_name(ClassLabel label);
std::optional<ClassLabel> class_from_name(std::string_view name);

// The ordered forbidden pair (H1, H2) defining the class.
const std::array<Pattern, 2>& class_patterns(ClassLabel label);

bool in_class(const Graph& g, ClassLabel label);

// Subset scan for one pattern of order <= 5 against a SmallView. The
// constructor enumerates all permutations of the pattern once and marks
// every adjacency code isomorphic to it, so each subset test is a single
// bit lookup.
class PatternScanner {
 public:
  explicit PatternScanner(const Pattern& p);

  bool contains(const SmallView& view) const;
  // Only subsets through the vertex `forced`; used by the incremental
  // class filters where all other vertices were already screened.
  bool contains_with(const SmallView& view, int forced) const;

  int order() const { return s_; }

 private:
  bool code_hit(const int* subset, const SmallView& view) const;
  int s_;
  std::array<uint64_t, 16> iso_{};
};

// True iff the view stays inside the class after vertex `added` arrived,
// assuming the view minus `added` was already in the class.
bool in_class_small(const SmallView& view, ClassLabel label, int added);

}  // namespace gallai
