#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "gallai/generators.hpp"
#include "gallai/graph.hpp"
#include "gallai/oracle.hpp"

using namespace gallai;

namespace {

Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

template <typename Fn>
std::optional<Errc> error_code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& err) {
    return err.code();
  }
  return std::nullopt;
}

Graph net() {
  return from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}});
}

}  // namespace

TEST_CASE("longest path length basics") {
  CHECK(longest_path_length(Graph{}) == 0);
  CHECK(longest_path_length(parse_graph6("@")) == 1);
  CHECK(longest_path_length(parse_graph6("Ch")) == 4);
  CHECK(longest_path_length(parse_graph6("Dhc")) == 5);
  CHECK(longest_path_length(parse_graph6("Bw")) == 3);
  // Disconnected: the maximum over components.
  CHECK(longest_path_length(from_edges(5, {{0, 1}, {1, 2}, {3, 4}})) == 3);
  CHECK(longest_path_length(petersen()) == 10);
}

TEST_CASE("frozen reports") {
  auto rep = longest_path_report(net());
  CHECK(rep.length == 5);
  CHECK(rep.path_count == 3);
  CHECK_FALSE(rep.truncated);
  CHECK(rep.gallai_set == VertexSet{0, 1, 2});
  // Lexicographic order of canonical sequences.
  REQUIRE(rep.paths.size() == 3);
  CHECK(rep.paths[0].vertices == std::vector<int>{3, 0, 1, 2, 5});
  CHECK(rep.paths[1].vertices == std::vector<int>{3, 0, 2, 1, 4});
  CHECK(rep.paths[2].vertices == std::vector<int>{4, 1, 0, 2, 5});

  rep = longest_path_report(parse_graph6("Bw"));
  CHECK(rep.length == 3);
  CHECK(rep.path_count == 3);
  CHECK(rep.gallai_set == VertexSet{0, 1, 2});

  // Star: every longest path is leaf-center-leaf.
  Graph star = from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  rep = longest_path_report(star);
  CHECK(rep.length == 3);
  CHECK(rep.path_count == 3);
  CHECK(rep.gallai_set == VertexSet{0});

  rep = longest_path_report(parse_graph6("Ch"));
  CHECK(rep.length == 4);
  CHECK(rep.path_count == 1);
  CHECK(rep.gallai_set == VertexSet{0, 1, 2, 3});

  // Chair (fork): P4 plus a pendant at the second path vertex.
  Graph chair = parse_graph6("DhO");
  rep = longest_path_report(chair);
  CHECK(rep.length == 4);
  CHECK(rep.path_count == 2);
  CHECK(rep.gallai_set == VertexSet{1, 2, 3});
}

TEST_CASE("enumeration order and canonical orientation") {
  std::vector<std::vector<int>> seen;
  auto stats = enumerate_longest_paths(
      parse_graph6("Dhc"), kDefaultPathBudget,
      [&](const std::vector<int>& p) { seen.push_back(p); });
  CHECK(stats.length == 5);
  CHECK(stats.path_count == 5);
  CHECK_FALSE(stats.truncated);
  REQUIRE(seen.size() == 5);
  CHECK(seen[0] == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(seen[1] == std::vector<int>{0, 4, 3, 2, 1});
  CHECK(seen[2] == std::vector<int>{1, 0, 4, 3, 2});
  CHECK(seen[3] == std::vector<int>{2, 1, 0, 4, 3});
  CHECK(seen[4] == std::vector<int>{3, 2, 1, 0, 4});
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  for (const auto& p : seen) CHECK(p.front() < p.back());
}

TEST_CASE("budget truncation") {
  Graph star = from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  auto rep = longest_path_report(star, 1);
  CHECK(rep.truncated);
  CHECK(rep.length == 3);  // length comes from the exact first pass
  CHECK(rep.path_count == 1);
  // Intersection of the enumerated prefix: a superset of the true set.
  CHECK(rep.gallai_set == VertexSet{0, 1, 2});

  rep = longest_path_report(parse_graph6("Dhc"), 2);
  CHECK(rep.truncated);
  CHECK(rep.path_count == 2);
  CHECK(rep.length == 5);
}

TEST_CASE("retention cap keeps counting") {
  auto rep = longest_path_report(parse_graph6("Dhc"), kDefaultPathBudget, 2);
  CHECK_FALSE(rep.truncated);
  CHECK(rep.path_count == 5);
  CHECK(rep.paths.size() == 2);
  CHECK(rep.gallai_set == VertexSet{0, 1, 2, 3, 4});
}

TEST_CASE("gallai set routes agree") {
  for (int n = 1; n <= 7; ++n) {
    enumerate_connected(n, [&](const Graph& g) {
      VertexSet via_paths = gallai_vertices(g);
      CHECK(via_paths == gallai_vertices_by_deletion(g));
      for (int v = 0; v < n; ++v)
        CHECK(is_gallai_vertex(g, v) ==
              std::binary_search(via_paths.begin(), via_paths.end(), v));
    });
  }
  std::mt19937 rng(11);
  int tested = 0;
  while (tested < 25) {
    GraphBuilder b(11);
    for (int u = 0; u < 11; ++u)
      for (int v = u + 1; v < 11; ++v)
        if (rng() % 100 < 25) b.add_edge(u, v);
    Graph g = b.build();
    if (!is_connected(g)) continue;
    ++tested;
    CHECK(gallai_vertices(g) == gallai_vertices_by_deletion(g));
  }
}

TEST_CASE("gallai set requires connectivity") {
  Graph two = from_edges(4, {{0, 1}, {2, 3}});
  CHECK(error_code_of([&] { gallai_vertices(two); }) == Errc::disconnected);
  CHECK(error_code_of([&] { gallai_vertices_by_deletion(two); }) ==
        Errc::disconnected);
  CHECK(error_code_of([&] { min_transversal(two, 2); }) ==
        Errc::disconnected);
}

TEST_CASE("hamiltonian helpers") {
  CHECK(has_hamiltonian_path(Graph{}));
  CHECK_FALSE(has_hamiltonian_cycle(Graph{}));
  CHECK(has_hamiltonian_path(parse_graph6("@")));
  CHECK(has_hamiltonian_cycle(parse_graph6("@")));
  Graph k2 = from_edges(2, {{0, 1}});
  CHECK(has_hamiltonian_path(k2));
  CHECK_FALSE(has_hamiltonian_cycle(k2));
  CHECK(has_hamiltonian_path(parse_graph6("Dhc")));
  CHECK(has_hamiltonian_cycle(parse_graph6("Dhc")));
  CHECK(has_hamiltonian_path(parse_graph6("Ch")));
  CHECK_FALSE(has_hamiltonian_cycle(parse_graph6("Ch")));
  CHECK_FALSE(has_hamiltonian_path(net()));
  // Petersen is hypohamiltonian: traceable but not hamiltonian.
  CHECK(has_hamiltonian_path(petersen()));
  CHECK_FALSE(has_hamiltonian_cycle(petersen()));
}

TEST_CASE("minimum transversals") {
  CHECK(min_transversal(from_edges(2, {{0, 1}}), 1) == VertexSet{0});
  CHECK(min_transversal(parse_graph6("Dhc"), 1) == VertexSet{0});
  Graph star = from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(min_transversal(star, 2) == VertexSet{0});
  CHECK(min_transversal(net(), 3) == VertexSet{0});

  // No single vertex meets all 42 longest paths of the pendant
  // counterexample; {0,1} is the lex-first pair that does.
  Graph b = walther_b();
  CHECK_FALSE(min_transversal(b, 1).has_value());
  CHECK(min_transversal(b, 2) == VertexSet{0, 1});
  CHECK(min_transversal(b, 3) == VertexSet{0, 1});
}

TEST_CASE("pendant counterexample report") {
  Graph b = walther_b();
  auto rep = longest_path_report(b);
  CHECK(rep.length == 10);
  CHECK(rep.path_count == 42);
  CHECK_FALSE(rep.truncated);
  CHECK(rep.gallai_set.empty());
}

TEST_CASE("triangle inflation report") {
  // The inflated variant keeps its 27 triangle corners on every longest
  // path: a longest path misses exactly two of the three pendants.
  Graph bp = walther_b_plus();
  auto rep = longest_path_report(bp);
  CHECK(rep.length == 28);
  CHECK(rep.path_count == 96);
  CHECK_FALSE(rep.truncated);
  VertexSet corners(27);
  std::iota(corners.begin(), corners.end(), 0);
  CHECK(rep.gallai_set == corners);
}
