#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace coh {

/// Dense node index in [0, node_count).
using NodeId = std::uint32_t;

/// Index into Graph::edges(), the canonical (u < v) edge list.
using EdgeId = std::uint32_t;

/// Canonical undirected edge with u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// One record of an edge list: two external labels plus an optional weight.
struct EdgeRecord {
  std::string u;
  std::string v;
  std::optional<double> weight;
};

/// Error raised while parsing text inputs (edge lists, model specs).
/// `line` is the 1-based source line (0 when the input was not line-oriented).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t line);

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A set of nodes of a host graph; members are kept sorted and unique.
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(std::vector<NodeId> members);

  const std::vector<NodeId>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(NodeId u) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const NodeSet&, const NodeSet&) = default;
  friend auto operator<=>(const NodeSet&, const NodeSet&) = default;

 private:
  std::vector<NodeId> members_;
};

/// Immutable undirected simple graph, optionally edge-weighted in (0, 1].
///
/// Neighbor lists are sorted ascending. External labels are remapped to
/// dense NodeIds in lexicographically sorted label order, so the same set
/// of input edges produces the same graph regardless of input order.
/// Instances are safe for concurrent read access once constructed.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph over nodes [0, n) from index pairs. Duplicate edges
  /// collapse (last weight wins); self-loops throw std::invalid_argument.
  /// `labels` defaults to the decimal representation of each id.
  /// `weights`, when non-empty, must parallel `edge_pairs` with values in
  /// (0, 1].
  static Graph from_index_edges(std::size_t n,
                                std::span<const std::pair<NodeId, NodeId>> edge_pairs,
                                std::span<const double> weights = {},
                                std::vector<std::string> labels = {});

  std::size_t node_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return edges_.size(); }
  bool is_weighted() const { return !edge_weights_.empty(); }

  /// Sorted neighbor list of u. Throws std::out_of_range on bad id.
  std::span<const NodeId> neighbors(NodeId u) const;

  std::size_t degree(NodeId u) const { return neighbors(u).size(); }

  bool has_edge(NodeId u, NodeId v) const;

  /// Weight of (u, v): 0 when the edge is absent, 1 for any present edge of
  /// an unweighted graph.
  double weight(NodeId u, NodeId v) const;

  /// Edges in canonical order: u < v, sorted lexicographically.
  std::span<const Edge> edges() const { return edges_; }

  /// Index of (u, v) in edges(), if the edge exists.
  std::optional<EdgeId> edge_id(NodeId u, NodeId v) const;

  double edge_weight(EdgeId e) const;

  const std::string& label(NodeId u) const;
  std::optional<NodeId> node_for_label(const std::string& label) const;

  /// Resolves labels to a NodeSet; throws ParseError on unknown labels.
  NodeSet set_from_labels(std::span<const std::string> labels) const;

  /// True when both graphs have the same labeled adjacency and weights,
  /// i.e. they are equal up to internal id assignment.
  bool same_labeled_graph(const Graph& other) const;

 private:
  void check_node(NodeId u) const;

  std::vector<std::size_t> offsets_;   // CSR offsets, size n+1
  std::vector<NodeId> adj_;            // concatenated sorted neighbor lists
  std::vector<EdgeId> adj_edge_;       // edge id per adjacency entry
  std::vector<Edge> edges_;            // canonical edge list
  std::vector<double> edge_weights_;   // parallel to edges_; empty if unweighted
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> label_to_id_;
};

/// Builds a graph from edge records, remapping labels to dense ids.
/// Records must be uniformly weighted or uniformly unweighted.
Graph from_edge_list(std::span<const EdgeRecord> records);

/// Parses the edge-list text format: one `u v [w]` per line, `#` comments,
/// blank lines ignored. Errors carry the offending line number.
Graph read_edge_list(std::istream& in);

Graph load_edge_list(const std::filesystem::path& path);

/// Writes the canonical edge list (labels, ascending id order). Weights are
/// printed with enough digits to round-trip exactly.
void write_edge_list(const Graph& g, std::ostream& out);

std::int64_t choose2(std::int64_t n);
std::int64_t choose3(std::int64_t n);

}  // namespace coh
