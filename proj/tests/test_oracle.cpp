#include <doctest.h>

#include "cohesion/oracle.hpp"
#include "testutil.hpp"

using namespace coh;
using namespace coh::testutil;

TEST_SUITE("oracle") {

TEST_CASE("naive stats on the six-node example") {
  const Graph g = example_six_node_graph();
  CHECK(naive_triangle_stats(g, six_node_dark_set(g)) == TriangleStats{2, 1});
}

TEST_CASE("naive stats corner cases") {
  const Graph k4 = complete_graph(4);
  CHECK(naive_triangle_stats(k4, NodeSet({0, 1, 2, 3})) == TriangleStats{4, 0});
  CHECK(naive_triangle_stats(k4, NodeSet()) == TriangleStats{0, 0});
}

TEST_CASE("naive stats refuse large graphs") {
  const Graph big = Graph::from_index_edges(70, {});
  CHECK_THROWS_AS(naive_triangle_stats(big, NodeSet()), std::length_error);
}

TEST_CASE("brute force finds a bridged clique") {
  const Graph g = bridged_cliques_graph();
  const BestSetResult best = brute_force_best_set(g, 3, 8);
  CHECK(best.score.value == 1.0);
  CHECK(best.set.size() == 4);
  // Tie between the two cliques resolves lexicographically.
  CHECK(best.set.members() == std::vector<NodeId>{0, 1, 2, 3});
}

TEST_CASE("brute force on a triangle-free graph scores zero") {
  const BestSetResult best = brute_force_best_set(cycle_graph(6), 3, 6);
  CHECK(best.score.value == 0.0);
  // All-zero tie resolves to the largest set, lexicographically first.
  CHECK(best.set.size() == 6);
}

TEST_CASE("brute force on a five-clique keeps the whole graph") {
  // Every proper 4-subset has outbound triangles (cohesion 0.4); only the
  // full set reaches 1.
  const BestSetResult best = brute_force_best_set(complete_graph(5), 3, 5);
  CHECK(best.score.value == 1.0);
  CHECK(best.set.size() == 5);
}

TEST_CASE("brute force refuses large graphs") {
  const Graph big = Graph::from_index_edges(21, {});
  CHECK_THROWS_AS(brute_force_best_set(big, 3, 4), std::length_error);
}

TEST_CASE("brute force score matches cohesion recomputation") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Graph g = random_gnp_graph(9, 0.5, 100 + seed);
    const BestSetResult best = brute_force_best_set(g, 3, 9);
    CHECK(best.score.value == cohesion(g, best.set).value);
  }
}

}  // TEST_SUITE
