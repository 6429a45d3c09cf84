#pragma once

#include "cohesion/graph.hpp"
#include "cohesion/triangles.hpp"

namespace coh {

/// Cohesion of a node set: the product of a triangle-density factor
/// (inbound triangles over the C(|S|,3) possible ones) and an isolation
/// factor (inbound over inbound-plus-outbound). Both factors, and hence the
/// value, lie in [0, 1].
///
/// Sets with fewer than 3 members, or with neither inbound nor outbound
/// triangles, score 0 by convention.
struct CohesionScore {
  double value = 0.0;
  double density_factor = 0.0;
  double isolation_factor = 0.0;
  WeightedTriangleStats stats;
};

/// Assembles a score from precomputed triangle stats for a set of the given
/// size.
CohesionScore score_from_stats(double inbound, double outbound, std::size_t set_size);

CohesionScore cohesion(const Graph& g, const NodeSet& s);

/// Weighted cohesion; identical to `cohesion` when every weight is 1.
CohesionScore weighted_cohesion(const Graph& g, const NodeSet& s);

/// Internal edge count over C(|S|,2); 0 when |S| < 2.
double density(const Graph& g, const NodeSet& s);

/// Transitivity of the induced subgraph: 3 * inbound triangles over the
/// number of connected triples within S; 0 when S has no such triples.
double clustering(const Graph& g, const NodeSet& s);

/// Cut edges between S and its complement over the smaller of the two
/// volumes (degree sums); 0 when either side has zero volume.
double conductance(const Graph& g, const NodeSet& s);

/// Certified upper bound on the cohesion of any set with `set_size` nodes
/// and `internal_edges` internal edges: min(1, m^(3/2) / C(|S|,3)), from the
/// bound that m edges can span at most m*sqrt(m) triangles.
double density_cohesion_bound(std::size_t set_size, std::int64_t internal_edges);

/// Number of edges with both endpoints in `s`.
std::int64_t internal_edge_count(const Graph& g, const NodeSet& s);

}  // namespace coh
