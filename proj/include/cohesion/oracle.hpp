#pragma once

#include <vector>

#include "cohesion/graph.hpp"
#include "cohesion/metrics.hpp"
#include "cohesion/triangles.hpp"

namespace coh {

// Brute-force reference implementations. Definitionally exact, deliberately
// slow, and guarded by hard size limits; they exist to check the fast paths
// in tests and self-check runs, never for production inputs.

/// Classifies every vertex triple directly. Graphs up to 64 nodes.
TriangleStats naive_triangle_stats(const Graph& g, const NodeSet& s);

/// Triangle-connectivity classes by transitive closure over the naive
/// triangle list, independent of the union-find path. Graphs up to 64
/// nodes. Classes ordered by smallest edge id, edges ascending.
std::vector<std::vector<EdgeId>> naive_triangle_classes(const Graph& g);

struct BestSetResult {
  NodeSet set;
  CohesionScore score;
};

/// Enumerates every subset with k_min <= |S| <= k_max and returns the
/// cohesion maximum. Ties resolve toward larger sets, then lexicographic
/// membership. Graphs up to 20 nodes.
BestSetResult brute_force_best_set(const Graph& g, std::size_t k_min, std::size_t k_max);

}  // namespace coh
