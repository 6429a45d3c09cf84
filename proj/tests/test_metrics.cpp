#include <doctest.h>

#include <cmath>

#include "cohesion/metrics.hpp"
#include "cohesion/oracle.hpp"
#include "testutil.hpp"

using namespace coh;
using namespace coh::testutil;

TEST_SUITE("metrics") {

TEST_CASE("six-node example scores one third") {
  const Graph g = example_six_node_graph();
  const CohesionScore score = cohesion(g, six_node_dark_set(g));
  CHECK(std::abs(score.value - 1.0 / 3.0) < 1e-12);
  CHECK(score.density_factor == 0.5);
  CHECK(std::abs(score.isolation_factor - 2.0 / 3.0) < 1e-12);
  CHECK(score.stats.inbound == 2.0);
  CHECK(score.stats.outbound == 1.0);
}

TEST_CASE("hub graph: equal edge counts, unequal cohesion") {
  const Graph g = two_clique_hub_graph();
  const NodeSet dark = set_of(g, {"d0", "d1", "d2", "d3"});
  const NodeSet light = set_of(g, {"l0", "l1", "l2", "l3"});

  CHECK(internal_edge_count(g, dark) == 6);
  CHECK(internal_edge_count(g, light) == 6);

  const CohesionScore dark_score = cohesion(g, dark);
  CHECK(dark_score.value == 1.0);
  CHECK(dark_score.stats.outbound == 0.0);

  const CohesionScore light_score = cohesion(g, light);
  CHECK(std::abs(light_score.value - 0.4) < 1e-12);
  CHECK(light_score.stats.inbound == 4.0);
  CHECK(light_score.stats.outbound == 6.0);
}

TEST_CASE("degenerate sets score zero") {
  const Graph g = complete_graph(5);
  CHECK(cohesion(g, NodeSet({0, 1})).value == 0.0);
  CHECK(cohesion(g, NodeSet()).value == 0.0);
  const Graph c6 = cycle_graph(6);
  CHECK(cohesion(c6, NodeSet({0, 1, 2, 3})).value == 0.0);
  CHECK(cohesion(c6, NodeSet({0, 1, 2, 3})).isolation_factor == 0.0);
}

TEST_CASE("member ids outside the graph are rejected") {
  const Graph g = complete_graph(4);
  CHECK_THROWS_AS(cohesion(g, NodeSet({1, 2, 9})), std::out_of_range);
  CHECK_THROWS_AS(density(g, NodeSet({0, 5})), std::out_of_range);
}

TEST_CASE("weighted cohesion") {
  const Graph tri = make_weighted_graph({{"a", "b", 0.5}, {"b", "c", 0.5}, {"a", "c", 0.5}});
  const CohesionScore score = weighted_cohesion(tri, set_of(tri, {"a", "b", "c"}));
  CHECK(std::abs(score.value - 0.125) < 1e-12);
  CHECK(score.isolation_factor == 1.0);

  // All weights 1 reproduce the unweighted value.
  const Graph six = example_six_node_graph();
  std::vector<std::tuple<std::string, std::string, double>> edges;
  for (const Edge& e : six.edges()) edges.emplace_back(six.label(e.u), six.label(e.v), 1.0);
  const Graph six_w = make_weighted_graph(edges);
  CHECK(weighted_cohesion(six_w, six_node_dark_set(six_w)).value ==
        cohesion(six, six_node_dark_set(six)).value);

  // A vanishing edge weight removes its triangle's contribution continuously.
  for (double w : {0.5, 0.1, 0.01, 0.001}) {
    const Graph t = make_weighted_graph({{"a", "b", 1.0}, {"b", "c", 1.0}, {"a", "c", w}});
    CHECK(std::abs(weighted_cohesion(t, set_of(t, {"a", "b", "c"})).value - w) < 1e-12);
  }
}

TEST_CASE("density") {
  const Graph k4 = complete_graph(4);
  CHECK(density(k4, NodeSet({0, 1, 2, 3})) == 1.0);
  const Graph g = example_six_node_graph();
  CHECK(std::abs(density(g, six_node_dark_set(g)) - 5.0 / 6.0) < 1e-12);
  CHECK(density(g, NodeSet({0})) == 0.0);
}

TEST_CASE("clustering coefficient") {
  const Graph k4 = complete_graph(4);
  CHECK(clustering(k4, NodeSet({0, 1, 2, 3})) == 1.0);
  const Graph p4 = path_graph(4);
  CHECK(clustering(p4, NodeSet({0, 1, 2, 3})) == 0.0);
  // Induced dark subgraph: 2 triangles over 8 connected triples.
  const Graph g = example_six_node_graph();
  CHECK(std::abs(clustering(g, six_node_dark_set(g)) - 0.75) < 1e-12);
}

TEST_CASE("conductance") {
  const Graph g = example_six_node_graph();
  // Cut {ce, de, df} = 3 against min(vol) = deg(e) + deg(f) = 5.
  CHECK(std::abs(conductance(g, six_node_dark_set(g)) - 0.6) < 1e-12);
  // Whole graph: complement side has zero volume.
  CHECK(conductance(g, set_of(g, {"a", "b", "c", "d", "e", "f"})) == 0.0);
  const Graph k4 = complete_graph(4);
  CHECK(std::abs(conductance(k4, NodeSet({0, 1})) - 4.0 / 6.0) < 1e-12);
}

TEST_CASE("density-cohesion bound") {
  CHECK(density_cohesion_bound(5, 0) == 0.0);
  CHECK(density_cohesion_bound(2, 1) == 0.0);
  CHECK(density_cohesion_bound(4, 6) == 1.0);
  CHECK(std::abs(density_cohesion_bound(10, 9) - 0.225) < 1e-12);
}

TEST_CASE("cohesion stays within the bound chain on random sets") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const auto n = static_cast<std::uint32_t>(6 + seed % 15);
    const Graph g = random_gnp_graph(n, 0.45, 6000 + seed);
    for (std::uint64_t s = 0; s < 12; ++s) {
      const NodeSet subset = random_subset(n, 3 + s % (n - 2), seed * 101 + s);
      const CohesionScore score = cohesion(g, subset);
      CHECK(score.value >= 0.0);
      CHECK(score.value <= 1.0);
      CHECK(score.value <= score.density_factor);
      const double bound =
          density_cohesion_bound(subset.size(), internal_edge_count(g, subset));
      CHECK(score.density_factor <= bound + 1e-15);
    }
  }
}

TEST_CASE("deleting weak ties never changes cohesion") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto n = static_cast<std::uint32_t>(8 + seed % 12);
    const Graph g = random_gnp_graph(n, 0.3, 7000 + seed);
    const EdgeClassPartition part = triangle_connectivity_classes(g);
    std::vector<char> weak(g.edge_count(), 0);
    for (EdgeId e : part.weak_ties) weak[e] = 1;
    std::vector<std::pair<NodeId, NodeId>> kept;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (!weak[e]) kept.emplace_back(g.edges()[e].u, g.edges()[e].v);
    const Graph pruned = Graph::from_index_edges(n, kept);
    for (std::uint64_t s = 0; s < 20; ++s) {
      const NodeSet subset = random_subset(n, 3 + s % (n - 2), seed * 13 + s);
      CHECK(cohesion(g, subset).value == cohesion(pruned, subset).value);
    }
  }
}

TEST_CASE("an extra outbound triangle strictly lowers the score") {
  for (std::int64_t inbound = 1; inbound <= 6; ++inbound) {
    for (std::int64_t outbound = 0; outbound <= 5; ++outbound) {
      const double with = score_from_stats(static_cast<double>(inbound),
                                           static_cast<double>(outbound), 5)
                              .value;
      const double more = score_from_stats(static_cast<double>(inbound),
                                           static_cast<double>(outbound + 1), 5)
                              .value;
      CHECK(more < with);
    }
  }
}

TEST_CASE("an isolated clique attains the size-k maximum") {
  const Graph g = bridged_cliques_graph();
  const NodeSet clique({0, 1, 2, 3});
  CHECK(cohesion(g, clique).value == 1.0);
  const BestSetResult best = brute_force_best_set(g, 4, 4);
  CHECK(best.score.value == 1.0);
}

}  // TEST_SUITE
