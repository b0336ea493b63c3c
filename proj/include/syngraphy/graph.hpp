#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace syngraphy {

using Node = std::int32_t;
using Edge = std::pair<Node, Node>;

/// Undirected simple graph on nodes 0..n-1.
///
/// Neighbour lists are kept sorted at all times. Graphs with at most
/// `kDenseLimit` nodes additionally keep a dense byte adjacency matrix so that
/// edge queries and column extraction stay O(1) / O(n) while the generator
/// toggles edges. Larger graphs answer edge queries by binary search.
class Graph {
 public:
  static constexpr std::size_t kDenseLimit = 2048;

  Graph() = default;
  explicit Graph(std::size_t n);

  /// Builds a simple graph from an arbitrary edge sequence: loops are dropped,
  /// parallel edges collapsed. Throws std::out_of_range for endpoints >= n.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t node_count() const noexcept { return neighbours_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool is_dense() const noexcept { return !matrix_.empty() || node_count() == 0; }

  bool has_edge(Node u, Node w) const;
  std::span<const Node> neighbours(Node u) const;
  std::int64_t degree(Node u) const { return degrees_.at(static_cast<std::size_t>(u)); }
  const std::vector<std::int64_t>& degrees() const noexcept { return degrees_; }

  /// Adds {u,w} if absent, removes it if present. Throws std::invalid_argument
  /// for u == w and std::out_of_range for nodes outside 0..n-1.
  void toggle_edge(Node u, Node w);

  /// Indicator vector of the neighbourhood of u (entry u is always 0).
  std::vector<std::int64_t> adjacency_column(Node u) const;

  /// All edges as (u, w) with u < w, in lexicographic order.
  std::vector<Edge> edges() const;

  /// External node names, indexed by node id. Empty when the graph was not parsed from text.
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  void set_labels(std::vector<std::string> labels);
  std::string label(Node u) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.neighbours_ == b.neighbours_;
  }

 private:
  void check_node(Node u) const;

  std::vector<std::vector<Node>> neighbours_;
  std::vector<std::int64_t> degrees_;
  std::vector<std::uint8_t> matrix_;
  std::size_t edge_count_ = 0;
  std::vector<std::string> labels_;
};

/// Parses a whitespace-separated edge list. Lines starting with '%' or '#' and
/// blank lines are skipped; columns after the second are ignored. Node tokens
/// are numbered in order of first appearance and kept as labels.
/// Throws ParseError on a line with fewer than two tokens or on empty input.
Graph from_edge_list(std::string_view text);

/// Reads a file and parses it with from_edge_list. Throws std::runtime_error if unreadable.
Graph read_edge_list(const std::string& path);

/// Writes one "u<TAB>w" line per edge, using labels when present.
std::string to_edge_list(const Graph& g);

/// G(n, p): each of the n(n-1)/2 pairs is an edge independently with probability p.
/// Deterministic given the seed. Throws std::invalid_argument for p outside [0,1] or n < 1.
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

/// A graph together with the ids its nodes had in the graph it was cut from.
struct Subgraph {
  Graph graph;
  std::vector<Node> original_ids;
};

/// Subgraph induced by `nodes` (duplicates ignored), relabelled in ascending
/// original-id order. Labels are carried over.
Subgraph induced_subgraph(const Graph& g, std::span<const Node> nodes);

/// Connected components as sorted node lists, ordered by their smallest node.
std::vector<std::vector<Node>> connected_components(const Graph& g);

/// Induced subgraph on the largest connected component; ties go to the component
/// holding the smallest node id. Throws std::invalid_argument on an empty graph.
Subgraph largest_component(const Graph& g);

}  // namespace syngraphy
