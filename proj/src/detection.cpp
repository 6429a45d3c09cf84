#include "cohesion/detection.hpp"

#include <algorithm>
#include <set>

namespace coh {

Graph ego_network(const Graph& g, NodeId u) {
  const auto nbrs = g.neighbors(u);
  const std::size_t k = nbrs.size();
  std::vector<NodeId> local_id(g.node_count(), 0);
  std::vector<char> is_nbr(g.node_count(), 0);
  std::vector<std::string> labels(k);
  for (std::size_t i = 0; i < k; ++i) {
    local_id[nbrs[i]] = static_cast<NodeId>(i);
    is_nbr[nbrs[i]] = 1;
    labels[i] = g.label(nbrs[i]);
  }
  std::vector<std::pair<NodeId, NodeId>> pairs;
  std::vector<double> weights;
  for (NodeId a : nbrs) {
    for (NodeId b : g.neighbors(a)) {
      if (b <= a || !is_nbr[b]) continue;
      pairs.emplace_back(local_id[a], local_id[b]);
      if (g.is_weighted()) weights.push_back(g.weight(a, b));
    }
  }
  return Graph::from_index_edges(k, pairs, weights, std::move(labels));
}

namespace {

// Triangle deltas of node x against the members flagged in `mask` (which
// must not flag x itself): `t_in` counts adjacent member pairs in N(x), i.e.
// triangles x would close inside the set; `t_out` counts (member, outsider)
// pairs completing a triangle through x.
struct NodeDeltas {
  std::int64_t t_in = 0;
  std::int64_t t_out = 0;
};

NodeDeltas node_deltas(const Graph& g, const std::vector<char>& mask, NodeId x) {
  NodeDeltas d;
  const auto nx = g.neighbors(x);
  for (NodeId a : nx) {
    if (!mask[a]) continue;
    const auto na = g.neighbors(a);
    std::size_t i = 0, j = 0;
    while (i < nx.size() && j < na.size()) {
      if (nx[i] < na[j]) {
        ++i;
      } else if (nx[i] > na[j]) {
        ++j;
      } else {
        // u is a common neighbor of x and a, hence never x itself.
        if (mask[na[j]]) {
          ++d.t_in;  // pair {a, u}, counted from both sides
        } else {
          ++d.t_out;
        }
        ++i;
        ++j;
      }
    }
  }
  d.t_in /= 2;
  return d;
}

// Greedy growth state for one seed. Keeps the member mask, per-node counts
// of member neighbors (the candidate filter), and exact triangle stats
// updated move by move.
class Growth {
 public:
  Growth(const Graph& g, const Triangle& seed)
      : g_(g), mask_(g.node_count(), 0), member_neighbors_(g.node_count(), 0) {
    for (NodeId v : {seed.u, seed.v, seed.w}) add(v);
  }

  const std::vector<NodeId>& members() const { return members_; }
  TriangleStats stats() const { return stats_; }

  double value() const {
    return score_from_stats(static_cast<double>(stats_.inbound),
                            static_cast<double>(stats_.outbound), members_.size())
        .value;
  }

  // Runs moves until no strictly improving add or removal exists.
  void run(const DetectionConfig& config) {
    double current = value();
    while (true) {
      if (auto next = best_add(config, current)) {
        add(*next);
        current = value();
        continue;
      }
      if (auto next = best_removal(current)) {
        remove(*next);
        current = value();
        continue;
      }
      break;
    }
  }

 private:
  std::optional<NodeId> best_add(const DetectionConfig& config, double current) {
    if (config.max_group_size != 0 && members_.size() >= config.max_group_size)
      return std::nullopt;
    std::optional<NodeId> best;
    double best_value = current;
    for (NodeId x = 0; x < g_.node_count(); ++x) {
      if (mask_[x] || member_neighbors_[x] < 2) continue;
      const NodeDeltas d = node_deltas(g_, mask_, x);
      const double v = score_from_stats(
                           static_cast<double>(stats_.inbound + d.t_in),
                           static_cast<double>(stats_.outbound - d.t_in + d.t_out),
                           members_.size() + 1)
                           .value;
      if (v > best_value) {
        best_value = v;
        best = x;
      }
    }
    return best;
  }

  std::optional<NodeId> best_removal(double current) {
    if (members_.size() <= 3) return std::nullopt;
    std::optional<NodeId> best;
    double best_value = current;
    for (NodeId r : members_) {
      mask_[r] = 0;
      const NodeDeltas d = node_deltas(g_, mask_, r);
      mask_[r] = 1;
      const double v = score_from_stats(
                           static_cast<double>(stats_.inbound - d.t_in),
                           static_cast<double>(stats_.outbound + d.t_in - d.t_out),
                           members_.size() - 1)
                           .value;
      if (v > best_value) {
        best_value = v;
        best = r;
      }
    }
    return best;
  }

  void add(NodeId v) {
    const NodeDeltas d = node_deltas(g_, mask_, v);
    stats_.inbound += d.t_in;
    stats_.outbound += d.t_out - d.t_in;
    mask_[v] = 1;
    members_.insert(std::lower_bound(members_.begin(), members_.end(), v), v);
    for (NodeId w : g_.neighbors(v)) ++member_neighbors_[w];
  }

  void remove(NodeId r) {
    mask_[r] = 0;
    const NodeDeltas d = node_deltas(g_, mask_, r);
    stats_.inbound -= d.t_in;
    stats_.outbound += d.t_in - d.t_out;
    members_.erase(std::lower_bound(members_.begin(), members_.end(), r));
    for (NodeId w : g_.neighbors(r)) --member_neighbors_[w];
  }

  const Graph& g_;
  std::vector<char> mask_;
  std::vector<std::int64_t> member_neighbors_;
  std::vector<NodeId> members_;
  TriangleStats stats_{};
};

}  // namespace

std::vector<Egomunity> detect_groups(const Graph& g, const DetectionConfig& config) {
  if (config.max_group_size != 0 && config.max_group_size < 3)
    throw std::invalid_argument("max_group_size below the minimum group size of 3");
  std::vector<Egomunity> out;
  std::set<std::vector<NodeId>> seen;
  for (const Triangle& seed : enumerate_triangles(g)) {
    Growth growth(g, seed);
    growth.run(config);
    if (!seen.insert(growth.members()).second) continue;
    NodeSet members(growth.members());
    CohesionScore score = cohesion(g, members);
    if (score.value < config.min_cohesion) continue;
    out.push_back({std::move(members), score, seed});
  }
  std::sort(out.begin(), out.end(), [](const Egomunity& a, const Egomunity& b) {
    if (a.score.value != b.score.value) return a.score.value > b.score.value;
    if (a.members.size() != b.members.size()) return a.members.size() > b.members.size();
    return a.members < b.members;
  });
  return out;
}

std::optional<NodeSet> find_cohesion_one(const Graph& g, std::size_t k) {
  if (k < 3) throw std::invalid_argument("cohesion-1 sets need k >= 3");
  const std::int64_t target_edges = choose2(static_cast<std::int64_t>(k));
  const EdgeClassPartition partition = triangle_connectivity_classes(g);
  for (const auto& cls : partition.classes) {
    if (static_cast<std::int64_t>(cls.size()) != target_edges) continue;
    std::vector<NodeId> vertices;
    vertices.reserve(k);
    for (EdgeId e : cls) {
      vertices.push_back(g.edges()[e].u);
      vertices.push_back(g.edges()[e].v);
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    if (vertices.size() != k) continue;
    NodeSet candidate(std::move(vertices));
    const TriangleStats stats = set_triangle_stats(g, candidate);
    if (stats.inbound == choose3(static_cast<std::int64_t>(k)) && stats.outbound == 0)
      return candidate;
  }
  return std::nullopt;
}

namespace {

bool zero_subset_dfs(const std::vector<std::uint64_t>& adj_mask, std::uint64_t chosen,
                     std::size_t next, std::size_t still_needed, std::size_t n,
                     std::vector<NodeId>& picked) {
  if (still_needed == 0) return true;
  if (n - next < still_needed) return false;
  // Include `next` if it closes no triangle with two chosen nodes.
  const std::uint64_t common = adj_mask[next] & chosen;
  bool closes = false;
  for (std::uint64_t rest = common; rest && !closes; rest &= rest - 1) {
    const unsigned a = static_cast<unsigned>(__builtin_ctzll(rest));
    closes = (adj_mask[a] & common & ~(~std::uint64_t{0} >> (63 - a))) != 0;
  }
  if (!closes) {
    picked.push_back(static_cast<NodeId>(next));
    if (zero_subset_dfs(adj_mask, chosen | (std::uint64_t{1} << next), next + 1,
                        still_needed - 1, n, picked))
      return true;
    picked.pop_back();
  }
  return zero_subset_dfs(adj_mask, chosen, next + 1, still_needed, n, picked);
}

}  // namespace

std::optional<NodeSet> max_cohesion_zero_subset(const Graph& g, std::size_t k,
                                                std::size_t exhaustive_limit) {
  const std::size_t n = g.node_count();
  if (n > exhaustive_limit || n > 63)
    throw std::length_error("graph exceeds the exhaustive-search limit");
  if (k == 0) throw std::invalid_argument("subset size must be positive");
  if (k > n) return std::nullopt;

  std::vector<std::uint64_t> adj_mask(n, 0);
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v : g.neighbors(u)) adj_mask[u] |= std::uint64_t{1} << v;

  std::vector<NodeId> picked;
  if (!zero_subset_dfs(adj_mask, 0, 0, k, n, picked)) return std::nullopt;
  return NodeSet(std::move(picked));
}

}  // namespace coh
