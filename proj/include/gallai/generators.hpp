#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gallai/graph.hpp"
#include "gallai/pattern.hpp"

namespace gallai {

// Petersen graph with the fixed labeling: outer cycle 0..4, inner
// pentagram 5..9 (5+i adjacent to 5+(i+2 mod 5)), spokes i to i+5.
Graph petersen();

// Petersen with vertex 0 removed (remaining vertices shifted down by one)
// and a fresh pendant vertex 9, 10, 11 attached to each former neighbor
// of 0. Twelve vertices, no Gallai vertex.
Graph walther_b();

// walther_b with every degree-3 vertex v inflated to the triangle
// 3v, 3v+1, 3v+2; corner k inherits v's k-th incident edge in ascending
// neighbor order, and the pendants become 27, 28, 29. The claw-free
// counterexample: 30 vertices, 42 edges.
Graph walther_b_plus();

// Seeded search for a connected n-vertex member of the class: structured
// proposals tailored to the class interleaved with edge-probability
// sweeps plus embedding-deletion repair, every candidate gated by the real
// membership test. Deterministic in (label, n, seed); nullopt when
// max_attempts proposals all fail.
std::optional<Graph> random_class_graph(ClassLabel label, int n,
                                        uint64_t seed,
                                        int max_attempts = 10'000);

// Growth filter for the enumeration sweeps: receives the candidate child
// and the index of the vertex that was just added, and must implement a
// hereditary property (the sweep assumes the graph minus that vertex
// already passed). An empty function means unrestricted.
using GrowPred = std::function<bool(const SmallView&, int added)>;

GrowPred class_grow_pred(ClassLabel label);
GrowPred free_grow_pred(const std::vector<std::string>& pattern_names);

// One representative per isomorphism class, every order 1..n_max, grown by
// vertex augmentation with canonical-code deduplication. sweep_connected
// keeps children connected (attachment sets non-empty); sweep_all allows
// isolated additions. n_max at most 10.
void sweep_connected(int n_max, const GrowPred& pred,
                     const std::function<void(const Graph&)>& visit);
void sweep_all(int n_max, const GrowPred& pred,
               const std::function<void(const Graph&)>& visit);

// Connected graphs of order exactly n (n <= 10), one per isomorphism
// class.
void enumerate_connected(int n,
                         const std::function<void(const Graph&)>& visit);

}  // namespace gallai
