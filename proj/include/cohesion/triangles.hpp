#pragma once

#include <cstdint>
#include <vector>

#include "cohesion/graph.hpp"

namespace coh {

/// Canonical triangle: u < v < w, pairwise connected in the host graph.
struct Triangle {
  NodeId u = 0;
  NodeId v = 0;
  NodeId w = 0;

  friend bool operator==(const Triangle&, const Triangle&) = default;
  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

/// Triangle counts relative to a node set S: `inbound` triangles have all
/// three vertices in S, `outbound` ones exactly two.
template <typename Count>
struct BasicTriangleStats {
  Count inbound{};
  Count outbound{};

  friend bool operator==(const BasicTriangleStats&, const BasicTriangleStats&) = default;
};

using TriangleStats = BasicTriangleStats<std::int64_t>;
using WeightedTriangleStats = BasicTriangleStats<double>;

/// Lists every triangle exactly once, in canonical order. Runs in
/// O(m^(3/2))-class time via degree-ordered forward neighbor intersection.
std::vector<Triangle> enumerate_triangles(const Graph& g);

/// Counts inbound and outbound triangles of `s`. Triangles with at most one
/// vertex in `s` are ignored. Cost is proportional to the adjacency lists
/// touched by `s`, not to the whole graph's triangle count.
TriangleStats set_triangle_stats(const Graph& g, const NodeSet& s);

/// Weighted analog: each triple contributes the product of its three edge
/// weights. Inbound sums over unordered triples within `s`, outbound over
/// pairs in `s` with the third vertex outside. On unweighted graphs every
/// weight is 1 and the result equals set_triangle_stats exactly.
WeightedTriangleStats weighted_set_triangle_stats(const Graph& g, const NodeSet& s);

/// Partition of triangle-participating edges into triangle-connectivity
/// classes. Two edges are equivalent when a chain of triangles links them,
/// consecutive triangles sharing an edge. Edges in no triangle are weak
/// ties and belong to no class.
struct EdgeClassPartition {
  /// Each class sorted ascending; classes ordered by smallest edge id.
  std::vector<std::vector<EdgeId>> classes;
  /// Edges belonging to no triangle, ascending.
  std::vector<EdgeId> weak_ties;
};

/// Computes triangle-connectivity classes with a union-find pass over the
/// triangle list.
EdgeClassPartition triangle_connectivity_classes(const Graph& g);

}  // namespace coh
