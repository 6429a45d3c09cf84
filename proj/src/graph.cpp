#include "cohesion/graph.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace coh {

ParseError::ParseError(std::string message, std::size_t line)
    : std::runtime_error(line == 0 ? message : message + " (line " + std::to_string(line) + ")"),
      line_(line) {}

NodeSet::NodeSet(std::vector<NodeId> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool NodeSet::contains(NodeId u) const {
  return std::binary_search(members_.begin(), members_.end(), u);
}

std::int64_t choose2(std::int64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

std::int64_t choose3(std::int64_t n) { return n < 3 ? 0 : n * (n - 1) / 2 * (n - 2) / 3; }

Graph Graph::from_index_edges(std::size_t n,
                              std::span<const std::pair<NodeId, NodeId>> edge_pairs,
                              std::span<const double> weights,
                              std::vector<std::string> labels) {
  const bool weighted = !weights.empty();
  if (weighted && weights.size() != edge_pairs.size())
    throw std::invalid_argument("weights must parallel edge pairs");
  if (!labels.empty() && labels.size() != n)
    throw std::invalid_argument("labels must cover every node");

  // Canonicalize, collapse duplicates (last weight wins).
  std::map<Edge, double> collapsed;
  for (std::size_t i = 0; i < edge_pairs.size(); ++i) {
    auto [u, v] = edge_pairs[i];
    if (u == v) throw std::invalid_argument("self-loop rejected");
    if (u >= n || v >= n) throw std::out_of_range("edge endpoint out of range");
    if (u > v) std::swap(u, v);
    const double w = weighted ? weights[i] : 1.0;
    if (!(w > 0.0) || w > 1.0)
      throw std::invalid_argument("edge weight outside (0, 1]");
    collapsed[Edge{u, v}] = w;
  }

  Graph g;
  g.edges_.reserve(collapsed.size());
  if (weighted) g.edge_weights_.reserve(collapsed.size());
  for (const auto& [e, w] : collapsed) {
    g.edges_.push_back(e);
    if (weighted) g.edge_weights_.push_back(w);
  }

  std::vector<std::size_t> deg(n, 0);
  for (const Edge& e : g.edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t u = 0; u < n; ++u) g.offsets_[u + 1] = g.offsets_[u] + deg[u];
  g.adj_.resize(g.offsets_[n]);
  g.adj_edge_.resize(g.offsets_[n]);
  // Filling in lex edge order leaves each neighbor list sorted: for node u,
  // smaller endpoints (from edges (w, u), w ascending) land before larger
  // ones (from edges (u, v), v ascending).
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (EdgeId id = 0; id < g.edges_.size(); ++id) {
    const Edge& e = g.edges_[id];
    g.adj_[cursor[e.u]] = e.v;
    g.adj_edge_[cursor[e.u]++] = id;
    g.adj_[cursor[e.v]] = e.u;
    g.adj_edge_[cursor[e.v]++] = id;
  }

  if (labels.empty()) {
    labels.resize(n);
    for (std::size_t u = 0; u < n; ++u) labels[u] = std::to_string(u);
  }
  g.labels_ = std::move(labels);
  g.label_to_id_.reserve(n);
  for (std::size_t u = 0; u < n; ++u) {
    if (!g.label_to_id_.emplace(g.labels_[u], static_cast<NodeId>(u)).second)
      throw std::invalid_argument("duplicate node label: " + g.labels_[u]);
  }
  return g;
}

void Graph::check_node(NodeId u) const {
  if (u >= node_count()) throw std::out_of_range("node id out of range");
}

std::span<const NodeId> Graph::neighbors(NodeId u) const {
  check_node(u);
  return {adj_.data() + offsets_[u], adj_.data() + offsets_[u + 1]};
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  check_node(v);
  if (u == v) return false;
  auto adj = neighbors(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::optional<EdgeId> Graph::edge_id(NodeId u, NodeId v) const {
  check_node(v);
  if (u == v) return std::nullopt;
  auto adj = neighbors(u);
  auto it = std::lower_bound(adj.begin(), adj.end(), v);
  if (it == adj.end() || *it != v) return std::nullopt;
  return adj_edge_[offsets_[u] + static_cast<std::size_t>(it - adj.begin())];
}

double Graph::weight(NodeId u, NodeId v) const {
  auto id = edge_id(u, v);
  if (!id) return 0.0;
  return is_weighted() ? edge_weights_[*id] : 1.0;
}

double Graph::edge_weight(EdgeId e) const {
  if (e >= edges_.size()) throw std::out_of_range("edge id out of range");
  return is_weighted() ? edge_weights_[e] : 1.0;
}

const std::string& Graph::label(NodeId u) const {
  check_node(u);
  return labels_[u];
}

std::optional<NodeId> Graph::node_for_label(const std::string& label) const {
  auto it = label_to_id_.find(label);
  if (it == label_to_id_.end()) return std::nullopt;
  return it->second;
}

NodeSet Graph::set_from_labels(std::span<const std::string> labels) const {
  std::vector<NodeId> ids;
  ids.reserve(labels.size());
  for (const auto& l : labels) {
    auto id = node_for_label(l);
    if (!id) throw ParseError("unknown node label: " + l, 0);
    ids.push_back(*id);
  }
  return NodeSet(std::move(ids));
}

bool Graph::same_labeled_graph(const Graph& other) const {
  if (node_count() != other.node_count() || edge_count() != other.edge_count() ||
      is_weighted() != other.is_weighted())
    return false;
  for (NodeId u = 0; u < node_count(); ++u) {
    if (!other.node_for_label(labels_[u])) return false;
  }
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    auto ou = other.node_for_label(labels_[e.u]);
    auto ov = other.node_for_label(labels_[e.v]);
    if (!ou || !ov || !other.has_edge(*ou, *ov)) return false;
    if (is_weighted() && edge_weights_[id] != other.weight(*ou, *ov)) return false;
  }
  return true;
}

namespace {

bool parse_weight(const std::string& token, double& out) {
  const char* begin = token.c_str();
  char* end = nullptr;
  out = std::strtod(begin, &end);
  return end == begin + token.size() && !token.empty() && std::isfinite(out);
}

struct RawEdge {
  std::string u, v;
  std::optional<double> weight;
  std::size_t line;
};

Graph build_from_raw(const std::vector<RawEdge>& raw) {
  std::optional<bool> weighted;
  for (const RawEdge& r : raw) {
    const bool has_w = r.weight.has_value();
    if (!weighted)
      weighted = has_w;
    else if (*weighted != has_w)
      throw ParseError("format error: mixing weighted and unweighted edges", r.line);
    if (r.u == r.v) throw ParseError("self-loop rejected: " + r.u, r.line);
    if (has_w && (!(*r.weight > 0.0) || *r.weight > 1.0))
      throw ParseError("domain error: edge weight outside (0, 1]", r.line);
  }

  // Dense ids in sorted label order, so any permutation of the input lines
  // produces an identical graph.
  std::vector<std::string> labels;
  labels.reserve(raw.size() * 2);
  for (const RawEdge& r : raw) {
    labels.push_back(r.u);
    labels.push_back(r.v);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  std::unordered_map<std::string, NodeId> id_of;
  id_of.reserve(labels.size());
  for (NodeId i = 0; i < labels.size(); ++i) id_of.emplace(labels[i], i);

  std::vector<std::pair<NodeId, NodeId>> pairs;
  std::vector<double> weights;
  pairs.reserve(raw.size());
  for (const RawEdge& r : raw) {
    pairs.emplace_back(id_of[r.u], id_of[r.v]);
    if (weighted.value_or(false)) weights.push_back(*r.weight);
  }
  const std::size_t n = labels.size();
  return Graph::from_index_edges(n, pairs, weights, std::move(labels));
}

}  // namespace

Graph from_edge_list(std::span<const EdgeRecord> records) {
  std::vector<RawEdge> raw;
  raw.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i)
    raw.push_back({records[i].u, records[i].v, records[i].weight, i + 1});
  return build_from_raw(raw);
}

Graph read_edge_list(std::istream& in) {
  std::vector<RawEdge> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first) || first.front() == '#') continue;
    std::string second, third, extra;
    if (!(tokens >> second))
      throw ParseError("parse error: expected `u v [w]`", line_no);
    RawEdge edge{first, second, std::nullopt, line_no};
    if (tokens >> third) {
      double w = 0.0;
      if (!parse_weight(third, w))
        throw ParseError("parse error: bad weight `" + third + "`", line_no);
      if (tokens >> extra)
        throw ParseError("parse error: trailing tokens", line_no);
      edge.weight = w;
    }
    raw.push_back(std::move(edge));
  }
  return build_from_raw(raw);
}

Graph load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string(), 0);
  return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  char buf[40];
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edges()[id];
    out << g.label(e.u) << ' ' << g.label(e.v);
    if (g.is_weighted()) {
      std::snprintf(buf, sizeof buf, "%.17g", g.edge_weight(id));
      out << ' ' << buf;
    }
    out << '\n';
  }
}

}  // namespace coh
