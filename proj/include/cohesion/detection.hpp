#pragma once

#include <optional>
#include <vector>

#include "cohesion/graph.hpp"
#include "cohesion/metrics.hpp"
#include "cohesion/triangles.hpp"

namespace coh {

/// Induced subgraph on the neighbors of `u`, ego excluded. Node labels are
/// carried over from the host graph, as are edge weights.
Graph ego_network(const Graph& g, NodeId u);

struct DetectionConfig {
  /// Groups scoring below this are dropped from the result.
  double min_cohesion = 0.0;
  /// Upper bound on group size; 0 means unlimited.
  std::size_t max_group_size = 0;
};

/// A detected group: its members, their cohesion in the host graph, and the
/// triangle seed the greedy growth started from.
struct Egomunity {
  NodeSet members;
  CohesionScore score;
  Triangle seed;
};

/// Greedy local cohesion maximization. Every triangle seeds a group, taken
/// in canonical order; growth repeatedly applies the best strictly improving
/// move - adding a node adjacent to at least two members, or dropping a
/// member - with ties broken toward the smallest node id, until the group is
/// a local maximum. Identical member sets are merged (first seed wins) and
/// the result is sorted by descending cohesion (then larger size, then
/// lexicographic members). Deterministic for a given graph and config.
std::vector<Egomunity> detect_groups(const Graph& g, const DetectionConfig& config = {});

/// Finds a k-node set with cohesion exactly 1, if one exists, via triangle
/// connectivity: a class with C(k,2) edges spanning exactly k vertices is a
/// candidate, and each candidate is verified against its triangle stats
/// rather than trusted. Returns the first verified set in class order.
/// Throws std::invalid_argument when k < 3.
std::optional<NodeSet> find_cohesion_one(const Graph& g, std::size_t k);

/// Exhaustive search for a size-k set with no inbound triangle (cohesion 0).
/// Refuses graphs larger than `exhaustive_limit` nodes by throwing
/// std::length_error; this is an oracle-grade operation, exponential in the
/// worst case. Returns the lexicographically first such set, or nullopt.
std::optional<NodeSet> max_cohesion_zero_subset(const Graph& g, std::size_t k,
                                                std::size_t exhaustive_limit = 20);

}  // namespace coh
