#include "cohesion/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace coh {

namespace {

void check_subset(const Graph& g, const NodeSet& s) {
  if (!s.empty() && s.members().back() >= g.node_count())
    throw std::out_of_range("node set member outside graph");
}

}  // namespace

CohesionScore score_from_stats(double inbound, double outbound, std::size_t set_size) {
  CohesionScore score;
  score.stats = {inbound, outbound};
  if (set_size < 3) return score;
  const double total = inbound + outbound;
  if (total <= 0.0) return score;
  score.density_factor = inbound / static_cast<double>(choose3(static_cast<std::int64_t>(set_size)));
  score.isolation_factor = inbound / total;
  score.value = score.density_factor * score.isolation_factor;
  return score;
}

CohesionScore cohesion(const Graph& g, const NodeSet& s) {
  check_subset(g, s);
  const TriangleStats stats = set_triangle_stats(g, s);
  return score_from_stats(static_cast<double>(stats.inbound),
                          static_cast<double>(stats.outbound), s.size());
}

CohesionScore weighted_cohesion(const Graph& g, const NodeSet& s) {
  check_subset(g, s);
  const WeightedTriangleStats stats = weighted_set_triangle_stats(g, s);
  return score_from_stats(stats.inbound, stats.outbound, s.size());
}

std::int64_t internal_edge_count(const Graph& g, const NodeSet& s) {
  check_subset(g, s);
  std::int64_t count = 0;
  for (NodeId v : s) {
    for (NodeId w : g.neighbors(v))
      if (w > v && s.contains(w)) ++count;
  }
  return count;
}

double density(const Graph& g, const NodeSet& s) {
  if (s.size() < 2) return 0.0;
  return static_cast<double>(internal_edge_count(g, s)) /
         static_cast<double>(choose2(static_cast<std::int64_t>(s.size())));
}

double clustering(const Graph& g, const NodeSet& s) {
  check_subset(g, s);
  // Connected triples within S: sum over members of C(induced degree, 2).
  std::int64_t triples = 0;
  for (NodeId v : s) {
    std::int64_t deg_in = 0;
    for (NodeId w : g.neighbors(v))
      if (s.contains(w)) ++deg_in;
    triples += choose2(deg_in);
  }
  if (triples == 0) return 0.0;
  const TriangleStats stats = set_triangle_stats(g, s);
  return 3.0 * static_cast<double>(stats.inbound) / static_cast<double>(triples);
}

double conductance(const Graph& g, const NodeSet& s) {
  check_subset(g, s);
  std::int64_t cut = 0;
  std::int64_t vol_s = 0;
  for (NodeId v : s) {
    vol_s += static_cast<std::int64_t>(g.degree(v));
    for (NodeId w : g.neighbors(v))
      if (!s.contains(w)) ++cut;
  }
  const std::int64_t vol_rest = 2 * static_cast<std::int64_t>(g.edge_count()) - vol_s;
  const std::int64_t vol_min = std::min(vol_s, vol_rest);
  if (vol_min == 0) return 0.0;
  return static_cast<double>(cut) / static_cast<double>(vol_min);
}

double density_cohesion_bound(std::size_t set_size, std::int64_t internal_edges) {
  if (set_size < 3 || internal_edges <= 0) return 0.0;
  const double m = static_cast<double>(internal_edges);
  const double bound = m * std::sqrt(m) / static_cast<double>(choose3(static_cast<std::int64_t>(set_size)));
  return std::min(1.0, bound);
}

}  // namespace coh
