#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "gallai/canonical.hpp"
#include "gallai/generators.hpp"
#include "gallai/graph.hpp"
#include "gallai/oracle.hpp"
#include "gallai/pattern.hpp"

using namespace gallai;

namespace {

template <typename Fn>
std::optional<Errc> error_code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& err) {
    return err.code();
  }
  return std::nullopt;
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> degs(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) degs[v] = g.degree(v);
  std::sort(degs.begin(), degs.end());
  return degs;
}

}  // namespace

TEST_CASE("fixed constructions") {
  Graph pet = petersen();
  CHECK(pet.vertex_count() == 10);
  CHECK(pet.edge_count() == 15);
  for (int v = 0; v < 10; ++v) CHECK(pet.degree(v) == 3);
  CHECK(is_free(pet, named_pattern("K3")));
  CHECK(is_free(pet, named_pattern("C4")));
  CHECK(to_graph6(pet) == "IheA@GUAo");

  Graph b = walther_b();
  CHECK(b.vertex_count() == 12);
  CHECK(b.edge_count() == 15);
  std::vector<int> want_b{1, 1, 1, 3, 3, 3, 3, 3, 3, 3, 3, 3};
  CHECK(degree_sequence(b) == want_b);
  CHECK(is_connected(b));
  CHECK_FALSE(is_free(b, named_pattern("claw")));
  CHECK(to_graph6(b) == "KhAAPWU_?_@?");
  // Pendants 9, 10, 11 sit on the former neighbors of the deleted hub.
  CHECK(b.adjacent(0, 9));
  CHECK(b.adjacent(3, 10));
  CHECK(b.adjacent(4, 11));

  Graph bp = walther_b_plus();
  CHECK(bp.vertex_count() == 30);
  CHECK(bp.edge_count() == 42);
  CHECK(is_connected(bp));
  CHECK(is_free(bp, named_pattern("claw")));
  std::vector<int> degs = degree_sequence(bp);
  CHECK(std::count(degs.begin(), degs.end(), 1) == 3);
  CHECK(std::count(degs.begin(), degs.end(), 3) == 27);
  // Corner triple 3v..3v+2 forms a triangle for every inflated vertex.
  for (int v = 0; v < 9; ++v) {
    CHECK(bp.adjacent(3 * v, 3 * v + 1));
    CHECK(bp.adjacent(3 * v, 3 * v + 2));
    CHECK(bp.adjacent(3 * v + 1, 3 * v + 2));
  }
  CHECK(to_graph6(bp) ==
        "]{CWOCB?O?_B????_?Y????C??WG???CC??B?G???A?_?@B?A????@?_??CX?????"
        "@?????_??");
}

TEST_CASE("canonical codes") {
  Graph c5 = parse_graph6("Dhc");
  std::mt19937 rng(3);
  std::vector<int> perm(5);
  std::iota(perm.begin(), perm.end(), 0);
  for (int round = 0; round < 20; ++round) {
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_code(relabel(c5, perm)) == canonical_code(c5));
  }
  // Same degree sequence, different graphs: C6 against two triangles.
  Graph c6 = parse_graph6("EhEG");
  GraphBuilder two(6);
  two.add_edge(0, 1).add_edge(0, 2).add_edge(1, 2);
  two.add_edge(3, 4).add_edge(3, 5).add_edge(4, 5);
  CHECK(canonical_code(c6) != canonical_code(two.build()));
  CHECK_FALSE(is_isomorphic(c6, two.build()));

  Graph back = graph_from_code(5, canonical_code(c5));
  CHECK(is_isomorphic(back, c5));
  CHECK(canonical_code(Graph{}) == 0);

  GraphBuilder big(12);
  CHECK(error_code_of([&] { canonical_code(big.build()); }) ==
        Errc::unsupported_size);
}

TEST_CASE("sweep counts match the catalogue") {
  // Graphs on n unlabeled vertices: 1, 2, 4, 11, 34, 156, 1044, 12346.
  std::vector<long> all(9, 0);
  sweep_all(8, nullptr, [&](const Graph& g) { ++all[g.vertex_count()]; });
  CHECK(all[1] == 1);
  CHECK(all[2] == 2);
  CHECK(all[3] == 4);
  CHECK(all[4] == 11);
  CHECK(all[5] == 34);
  CHECK(all[6] == 156);
  CHECK(all[7] == 1044);
  CHECK(all[8] == 12346);

  // Connected: 1, 1, 2, 6, 21, 112, 853, 11117.
  std::vector<long> conn(9, 0);
  sweep_connected(8, nullptr,
                  [&](const Graph& g) { ++conn[g.vertex_count()]; });
  CHECK(conn[1] == 1);
  CHECK(conn[2] == 1);
  CHECK(conn[3] == 2);
  CHECK(conn[4] == 6);
  CHECK(conn[5] == 21);
  CHECK(conn[6] == 112);
  CHECK(conn[7] == 853);
  CHECK(conn[8] == 11117);

  CHECK(error_code_of([] { sweep_connected(11, nullptr, nullptr); }) ==
        Errc::unsupported_size);
  CHECK(error_code_of([] { sweep_all(0, nullptr, nullptr); }) ==
        Errc::unsupported_size);
}

TEST_CASE("exact-order enumeration") {
  int count = 0;
  enumerate_connected(1, [&](const Graph&) { ++count; });
  CHECK(count == 1);
  count = 0;
  enumerate_connected(3, [&](const Graph& g) {
    ++count;
    CHECK(g.vertex_count() == 3);
    CHECK(is_connected(g));
  });
  CHECK(count == 2);
  count = 0;
  enumerate_connected(4, [&](const Graph&) { ++count; });
  CHECK(count == 6);

  // No two visited graphs are isomorphic.
  std::set<uint64_t> codes;
  enumerate_connected(5, [&](const Graph& g) {
    CHECK(codes.insert(canonical_code(g)).second);
  });
  CHECK(codes.size() == 21);

  CHECK(error_code_of([] { enumerate_connected(0, nullptr); }) ==
        Errc::unsupported_size);
  CHECK(error_code_of([] { enumerate_connected(11, nullptr); }) ==
        Errc::unsupported_size);
}

TEST_CASE("growth predicates prune exactly") {
  for (ClassLabel label : kAllClassLabels) {
    long restricted = 0;
    sweep_connected(6, class_grow_pred(label),
                    [&](const Graph&) { ++restricted; });
    long filtered = 0;
    for (int n = 1; n <= 6; ++n)
      enumerate_connected(n, [&](const Graph& g) {
        if (in_class(g, label)) ++filtered;
      });
    CAPTURE(class_name(label));
    CHECK(restricted == filtered);
  }

  GrowPred pred = free_grow_pred({"K3", "C4"});
  long restricted = 0;
  sweep_connected(6, pred, [&](const Graph&) { ++restricted; });
  long filtered = 0;
  for (int n = 1; n <= 6; ++n)
    enumerate_connected(n, [&](const Graph& g) {
      if (is_free(g, named_pattern("K3")) &&
          is_free(g, named_pattern("C4")))
        ++filtered;
    });
  CHECK(restricted == filtered);
}

TEST_CASE("random class graphs are members") {
  for (ClassLabel label : kAllClassLabels) {
    CAPTURE(class_name(label));
    for (int n : {1, 2, 5, 10, 24, 40}) {
      for (uint64_t seed : {1u, 2u, 3u}) {
        auto g = random_class_graph(label, n, seed);
        REQUIRE(g.has_value());
        CHECK(g->vertex_count() == n);
        CHECK(is_connected(*g));
        CHECK(in_class(*g, label));
      }
    }
  }
}

TEST_CASE("random class graphs are deterministic") {
  for (ClassLabel label : kAllClassLabels) {
    auto a = random_class_graph(label, 20, 99);
    auto b = random_class_graph(label, 20, 99);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(to_graph6(*a) == to_graph6(*b));
  }
}

TEST_CASE("random class graph bounds and tiny orders") {
  CHECK(error_code_of([] {
          random_class_graph(ClassLabel::p5_triangle, 0, 1);
        }) == Errc::unsupported_size);
  CHECK(error_code_of([] {
          random_class_graph(ClassLabel::p5_triangle, 201, 1);
        }) == Errc::unsupported_size);

  // Any connected graph on three vertices fits this class.
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    auto g = random_class_graph(ClassLabel::claw_p2_3p1, 3, seed);
    REQUIRE(g.has_value());
    CHECK(g->vertex_count() == 3);
    CHECK((g->edge_count() == 2 || g->edge_count() == 3));
  }

  auto big = random_class_graph(ClassLabel::p5_triangle, 200, 7);
  REQUIRE(big.has_value());
  CHECK(big->vertex_count() == 200);
  CHECK(is_connected(*big));
  CHECK(in_class(*big, ClassLabel::p5_triangle));
}
