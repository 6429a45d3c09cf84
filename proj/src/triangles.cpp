#include "cohesion/triangles.hpp"

#include <algorithm>
#include <numeric>

namespace coh {

namespace {

// Rank nodes by (degree, id); orienting edges toward higher rank turns the
// graph into a DAG where every triangle has a unique lowest-rank apex.
std::vector<NodeId> degree_order_rank(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    return std::make_pair(g.degree(a), a) < std::make_pair(g.degree(b), b);
  });
  std::vector<NodeId> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[order[i]] = static_cast<NodeId>(i);
  return rank;
}

struct MemberMask {
  explicit MemberMask(const Graph& g, const NodeSet& s) : in(g.node_count(), 0) {
    if (!s.empty() && s.members().back() >= g.node_count())
      throw std::out_of_range("node set member outside graph");
    for (NodeId u : s) in[u] = 1;
  }
  bool operator()(NodeId u) const { return in[u] != 0; }
  std::vector<char> in;
};

}  // namespace

std::vector<Triangle> enumerate_triangles(const Graph& g) {
  const std::size_t n = g.node_count();
  const auto rank = degree_order_rank(g);

  // Forward adjacency: neighbors of higher rank, sorted by id so that a
  // linear merge intersects two lists.
  std::vector<std::vector<NodeId>> forward(n);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : g.neighbors(u))
      if (rank[v] > rank[u]) forward[u].push_back(v);
  }

  std::vector<Triangle> out;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : forward[u]) {
      const auto& fu = forward[u];
      const auto& fv = forward[v];
      std::size_t i = 0, j = 0;
      while (i < fu.size() && j < fv.size()) {
        if (fu[i] < fv[j]) {
          ++i;
        } else if (fu[i] > fv[j]) {
          ++j;
        } else {
          NodeId t[3] = {u, v, fu[i]};
          std::sort(t, t + 3);
          out.push_back({t[0], t[1], t[2]});
          ++i;
          ++j;
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

TriangleStats set_triangle_stats(const Graph& g, const NodeSet& s) {
  MemberMask in_s(g, s);
  std::int64_t inbound_x3 = 0;
  std::int64_t outbound = 0;
  // For every edge (v, w) inside S, scan common neighbors u. An inbound
  // triangle is met once per internal edge (three times total); an outbound
  // one exactly once, at its unique internal edge.
  for (NodeId v : s) {
    for (NodeId w : g.neighbors(v)) {
      if (w <= v || !in_s(w)) continue;
      auto nv = g.neighbors(v);
      auto nw = g.neighbors(w);
      std::size_t i = 0, j = 0;
      while (i < nv.size() && j < nw.size()) {
        if (nv[i] < nw[j]) {
          ++i;
        } else if (nv[i] > nw[j]) {
          ++j;
        } else {
          if (in_s(nv[i]))
            ++inbound_x3;
          else
            ++outbound;
          ++i;
          ++j;
        }
      }
    }
  }
  return {inbound_x3 / 3, outbound};
}

WeightedTriangleStats weighted_set_triangle_stats(const Graph& g, const NodeSet& s) {
  if (!g.is_weighted()) {
    const TriangleStats counts = set_triangle_stats(g, s);
    return {static_cast<double>(counts.inbound), static_cast<double>(counts.outbound)};
  }
  MemberMask in_s(g, s);
  double inbound_x3 = 0.0;
  double outbound = 0.0;
  for (NodeId v : s) {
    for (NodeId w : g.neighbors(v)) {
      if (w <= v || !in_s(w)) continue;
      const double w_vw = g.weight(v, w);
      auto nv = g.neighbors(v);
      auto nw = g.neighbors(w);
      std::size_t i = 0, j = 0;
      while (i < nv.size() && j < nw.size()) {
        if (nv[i] < nw[j]) {
          ++i;
        } else if (nv[i] > nw[j]) {
          ++j;
        } else {
          const NodeId u = nv[i];
          const double triple = w_vw * g.weight(v, u) * g.weight(w, u);
          if (in_s(u))
            inbound_x3 += triple;
          else
            outbound += triple;
          ++i;
          ++j;
        }
      }
    }
  }
  return {inbound_x3 / 3.0, outbound};
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace

EdgeClassPartition triangle_connectivity_classes(const Graph& g) {
  const std::size_t m = g.edge_count();
  UnionFind uf(m);
  std::vector<char> in_triangle(m, 0);

  for (const Triangle& t : enumerate_triangles(g)) {
    const EdgeId uv = *g.edge_id(t.u, t.v);
    const EdgeId uw = *g.edge_id(t.u, t.w);
    const EdgeId vw = *g.edge_id(t.v, t.w);
    in_triangle[uv] = in_triangle[uw] = in_triangle[vw] = 1;
    uf.unite(uv, uw);
    uf.unite(uv, vw);
  }

  EdgeClassPartition out;
  std::vector<std::size_t> class_of_root(m, SIZE_MAX);
  for (EdgeId e = 0; e < m; ++e) {
    if (!in_triangle[e]) {
      out.weak_ties.push_back(e);
      continue;
    }
    const std::size_t root = uf.find(e);
    if (class_of_root[root] == SIZE_MAX) {
      class_of_root[root] = out.classes.size();
      out.classes.emplace_back();
    }
    out.classes[class_of_root[root]].push_back(e);
  }
  return out;
}

}  // namespace coh
