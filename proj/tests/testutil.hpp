#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cohesion/graph.hpp"
#include "cohesion/models.hpp"

namespace coh::testutil {

inline Graph make_graph(std::vector<std::pair<std::string, std::string>> edges) {
  std::vector<EdgeRecord> records;
  for (auto& [u, v] : edges) records.push_back({std::move(u), std::move(v), std::nullopt});
  return from_edge_list(records);
}

inline Graph make_weighted_graph(std::vector<std::tuple<std::string, std::string, double>> edges) {
  std::vector<EdgeRecord> records;
  for (auto& [u, v, w] : edges) records.push_back({std::move(u), std::move(v), w});
  return from_edge_list(records);
}

inline NodeSet set_of(const Graph& g, std::vector<std::string> labels) {
  return g.set_from_labels(labels);
}

// Six nodes, nine edges: a 4-node near-clique (one diagonal missing) sharing
// an edge with a 4-cycle-plus-diagonal on the right. Four triangles in
// total; {a,b,c,d} sees two of them inside and one outbound through {c,d}.
inline Graph example_six_node_graph() {
  return make_graph({{"a", "b"}, {"a", "c"}, {"b", "c"}, {"b", "d"}, {"c", "d"},
                     {"c", "e"}, {"d", "e"}, {"d", "f"}, {"e", "f"}});
}

inline NodeSet six_node_dark_set(const Graph& g) { return set_of(g, {"a", "b", "c", "d"}); }

// Two 4-cliques with four bridge edges, all incident to the hub d0 of the
// first clique. Both cliques have 6 internal and 4 external edges, yet only
// the hub's clique is free of outbound triangles.
inline Graph two_clique_hub_graph() {
  std::vector<std::pair<std::string, std::string>> edges;
  const std::vector<std::string> dark = {"d0", "d1", "d2", "d3"};
  const std::vector<std::string> light = {"l0", "l1", "l2", "l3"};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      edges.emplace_back(dark[i], dark[j]);
      edges.emplace_back(light[i], light[j]);
    }
  for (const auto& l : light) edges.emplace_back("d0", l);
  return make_graph(edges);
}

inline Graph complete_graph(std::size_t k) {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (NodeId u = 0; u < k; ++u)
    for (NodeId v = u + 1; v < k; ++v) pairs.emplace_back(u, v);
  return Graph::from_index_edges(k, pairs);
}

inline Graph cycle_graph(std::size_t k) {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (NodeId u = 0; u < k; ++u) pairs.emplace_back(u, static_cast<NodeId>((u + 1) % k));
  return Graph::from_index_edges(k, pairs);
}

inline Graph path_graph(std::size_t k) {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (NodeId u = 0; u + 1 < k; ++u) pairs.emplace_back(u, u + 1);
  return Graph::from_index_edges(k, pairs);
}

// Two K4s {0..3} and {4..7} joined by the bridge edge (3, 4).
inline Graph bridged_cliques_graph() {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (NodeId u = 0; u < 4; ++u)
    for (NodeId v = u + 1; v < 4; ++v) {
      pairs.emplace_back(u, v);
      pairs.emplace_back(u + 4, v + 4);
    }
  pairs.emplace_back(3, 4);
  return Graph::from_index_edges(8, pairs);
}

inline Graph random_gnp_graph(std::uint32_t n, double p, std::uint64_t seed) {
  ModelSpec spec;
  spec.kind = ModelKind::gnp;
  spec.n = n;
  spec.p = p;
  spec.rng_seed = seed;
  return gen_gnp(spec);
}

inline NodeSet random_subset(std::size_t n, std::size_t k, std::uint64_t seed) {
  std::vector<NodeId> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<NodeId>(i);
  SplitMix64Stream stream(seed);
  for (std::size_t i = 0; i < k && i < n; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(stream.next_below(n - i));
    std::swap(ids[i], ids[j]);
  }
  ids.resize(std::min(k, n));
  return NodeSet(std::move(ids));
}

}  // namespace coh::testutil
