#include "cohesion/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace coh {

namespace {

constexpr std::size_t kNaiveLimit = 64;
constexpr std::size_t kSubsetLimit = 20;

void check_limit(const Graph& g, std::size_t limit) {
  if (g.node_count() > limit)
    throw std::length_error("graph exceeds the brute-force size limit");
}

}  // namespace

TriangleStats naive_triangle_stats(const Graph& g, const NodeSet& s) {
  check_limit(g, kNaiveLimit);
  if (!s.empty() && s.members().back() >= g.node_count())
    throw std::out_of_range("node set member outside graph");
  const std::size_t n = g.node_count();
  std::vector<char> in_s(n, 0);
  for (NodeId u : s) in_s[u] = 1;
  TriangleStats stats;
  for (NodeId u = 0; u + 2 < n; ++u) {
    for (NodeId v = u + 1; v + 1 < n; ++v) {
      if (!g.has_edge(u, v)) continue;
      for (NodeId w = v + 1; w < n; ++w) {
        if (!g.has_edge(u, w) || !g.has_edge(v, w)) continue;
        const int members = in_s[u] + in_s[v] + in_s[w];
        if (members == 3)
          ++stats.inbound;
        else if (members == 2)
          ++stats.outbound;
      }
    }
  }
  return stats;
}

std::vector<std::vector<EdgeId>> naive_triangle_classes(const Graph& g) {
  check_limit(g, kNaiveLimit);
  const std::size_t n = g.node_count();
  std::vector<std::array<EdgeId, 3>> tri_edges;
  for (NodeId u = 0; u + 2 < n; ++u)
    for (NodeId v = u + 1; v + 1 < n; ++v) {
      if (!g.has_edge(u, v)) continue;
      for (NodeId w = v + 1; w < n; ++w)
        if (g.has_edge(u, w) && g.has_edge(v, w))
          tri_edges.push_back({*g.edge_id(u, v), *g.edge_id(u, w), *g.edge_id(v, w)});
    }

  // Transitive closure on the share-an-edge relation between triangles.
  const std::size_t t = tri_edges.size();
  std::vector<std::size_t> component(t);
  for (std::size_t i = 0; i < t; ++i) component[i] = i;
  bool changed = true;
  auto shares_edge = [&](std::size_t a, std::size_t b) {
    for (EdgeId ea : tri_edges[a])
      for (EdgeId eb : tri_edges[b])
        if (ea == eb) return true;
    return false;
  };
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < t; ++a)
      for (std::size_t b = a + 1; b < t; ++b)
        if (component[a] != component[b] && shares_edge(a, b)) {
          const std::size_t from = std::max(component[a], component[b]);
          const std::size_t to = std::min(component[a], component[b]);
          for (auto& c : component)
            if (c == from) c = to;
          changed = true;
        }
  }

  std::vector<std::vector<EdgeId>> classes;
  // Collect per component in order of smallest edge id.
  std::vector<std::pair<EdgeId, std::size_t>> firsts;
  for (std::size_t i = 0; i < t; ++i) {
    if (component[i] != i) continue;
    EdgeId smallest = tri_edges[i][0];
    for (std::size_t j = 0; j < t; ++j)
      if (component[j] == i)
        smallest = std::min({smallest, tri_edges[j][0], tri_edges[j][1], tri_edges[j][2]});
    firsts.emplace_back(smallest, i);
  }
  std::sort(firsts.begin(), firsts.end());
  for (const auto& [smallest, root] : firsts) {
    std::vector<EdgeId> edges;
    for (std::size_t j = 0; j < t; ++j)
      if (component[j] == root)
        edges.insert(edges.end(), tri_edges[j].begin(), tri_edges[j].end());
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    classes.push_back(std::move(edges));
  }
  return classes;
}

BestSetResult brute_force_best_set(const Graph& g, std::size_t k_min, std::size_t k_max) {
  check_limit(g, kSubsetLimit);
  const std::size_t n = g.node_count();
  k_max = std::min(k_max, n);
  if (k_min > k_max) throw std::invalid_argument("empty subset-size range");

  const std::vector<Triangle> triangles = enumerate_triangles(g);
  std::vector<std::uint32_t> tri_masks(triangles.size());
  for (std::size_t i = 0; i < triangles.size(); ++i)
    tri_masks[i] = (1u << triangles[i].u) | (1u << triangles[i].v) | (1u << triangles[i].w);

  auto members_of = [](std::uint32_t mask) {
    std::vector<NodeId> ids;
    for (std::uint32_t rest = mask; rest; rest &= rest - 1)
      ids.push_back(static_cast<NodeId>(std::countr_zero(rest)));
    return ids;
  };

  bool found = false;
  double best_value = -1.0;
  std::uint32_t best_mask = 0;
  std::vector<NodeId> best_members;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size < k_min || size > k_max) continue;
    std::int64_t inbound = 0, outbound = 0;
    for (std::uint32_t tm : tri_masks) {
      const int inside = std::popcount(tm & mask);
      if (inside == 3)
        ++inbound;
      else if (inside == 2)
        ++outbound;
    }
    const double value = score_from_stats(static_cast<double>(inbound),
                                          static_cast<double>(outbound), size)
                             .value;
    if (!found || value > best_value) {
      found = true;
      best_value = value;
      best_mask = mask;
      best_members = members_of(mask);
      continue;
    }
    if (value < best_value) continue;
    // Tie: larger set first, then lexicographically smaller membership.
    const auto best_size = static_cast<std::size_t>(std::popcount(best_mask));
    if (size != best_size) {
      if (size > best_size) {
        best_mask = mask;
        best_members = members_of(mask);
      }
      continue;
    }
    auto candidate = members_of(mask);
    if (candidate < best_members) {
      best_mask = mask;
      best_members = std::move(candidate);
    }
  }

  if (!found) throw std::invalid_argument("no subset in the requested size range");
  BestSetResult result;
  result.set = NodeSet(std::move(best_members));
  result.score = cohesion(g, result.set);
  return result;
}

}  // namespace coh
