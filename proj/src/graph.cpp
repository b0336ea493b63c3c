#include "syngraphy/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "syngraphy/error.hpp"

namespace syngraphy {

Graph::Graph(std::size_t n) : neighbours_(n), degrees_(n, 0) {
  if (n > 0 && n <= kDenseLimit) matrix_.assign(n * n, 0);
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (auto [u, w] : edges) {
    g.check_node(u);
    g.check_node(w);
    if (u == w) continue;
    canon.emplace_back(std::min(u, w), std::max(u, w));
  }
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

  for (auto [u, w] : canon) {
    ++g.degrees_[static_cast<std::size_t>(u)];
    ++g.degrees_[static_cast<std::size_t>(w)];
  }
  for (std::size_t u = 0; u < n; ++u) g.neighbours_[u].reserve(static_cast<std::size_t>(g.degrees_[u]));
  for (auto [u, w] : canon) {
    g.neighbours_[static_cast<std::size_t>(u)].push_back(w);
    g.neighbours_[static_cast<std::size_t>(w)].push_back(u);
    if (!g.matrix_.empty()) {
      g.matrix_[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(w)] = 1;
      g.matrix_[static_cast<std::size_t>(w) * n + static_cast<std::size_t>(u)] = 1;
    }
  }
  for (auto& list : g.neighbours_) std::sort(list.begin(), list.end());
  g.edge_count_ = canon.size();
  return g;
}

void Graph::check_node(Node u) const {
  if (u < 0 || static_cast<std::size_t>(u) >= node_count())
    throw std::out_of_range("node " + std::to_string(u) + " out of range for graph with " +
                            std::to_string(node_count()) + " nodes");
}

bool Graph::has_edge(Node u, Node w) const {
  check_node(u);
  check_node(w);
  if (!matrix_.empty())
    return matrix_[static_cast<std::size_t>(u) * node_count() + static_cast<std::size_t>(w)] != 0;
  const auto& list = neighbours_[static_cast<std::size_t>(u)];
  return std::binary_search(list.begin(), list.end(), w);
}

std::span<const Node> Graph::neighbours(Node u) const {
  check_node(u);
  return neighbours_[static_cast<std::size_t>(u)];
}

void Graph::toggle_edge(Node u, Node w) {
  check_node(u);
  check_node(w);
  if (u == w) throw std::invalid_argument("cannot toggle a self-loop on node " + std::to_string(u));

  const auto uu = static_cast<std::size_t>(u);
  const auto ww = static_cast<std::size_t>(w);
  auto& lu = neighbours_[uu];
  auto& lw = neighbours_[ww];
  auto pos_u = std::lower_bound(lu.begin(), lu.end(), w);
  auto pos_w = std::lower_bound(lw.begin(), lw.end(), u);
  const bool present = pos_u != lu.end() && *pos_u == w;
  const std::int64_t step = present ? -1 : 1;

  if (present) {
    lu.erase(pos_u);
    lw.erase(pos_w);
    --edge_count_;
  } else {
    lu.insert(pos_u, w);
    lw.insert(pos_w, u);
    ++edge_count_;
  }
  degrees_[uu] += step;
  degrees_[ww] += step;
  if (!matrix_.empty()) {
    const std::uint8_t value = present ? 0 : 1;
    matrix_[uu * node_count() + ww] = value;
    matrix_[ww * node_count() + uu] = value;
  }
}

std::vector<std::int64_t> Graph::adjacency_column(Node u) const {
  check_node(u);
  std::vector<std::int64_t> column(node_count(), 0);
  for (Node w : neighbours_[static_cast<std::size_t>(u)]) column[static_cast<std::size_t>(w)] = 1;
  return column;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < node_count(); ++u)
    for (Node w : neighbours_[u])
      if (static_cast<std::size_t>(w) > u) out.emplace_back(static_cast<Node>(u), w);
  return out;
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != node_count())
    throw std::invalid_argument("label count does not match node count");
  labels_ = std::move(labels);
}

std::string Graph::label(Node u) const {
  check_node(u);
  return labels_.empty() ? std::to_string(u) : labels_[static_cast<std::size_t>(u)];
}

Graph from_edge_list(std::string_view text) {
  std::unordered_map<std::string, Node> ids;
  std::vector<std::string> labels;
  std::vector<Edge> edges;

  auto intern = [&](const std::string& token) {
    auto [it, inserted] = ids.try_emplace(token, static_cast<Node>(labels.size()));
    if (inserted) labels.push_back(token);
    return it->second;
  };

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    if (line[first] == '%' || line[first] == '#') continue;

    std::istringstream fields{std::string(line)};
    std::string a, b;
    if (!(fields >> a >> b)) throw ParseError("expected two node identifiers", line_no);
    const Node u = intern(a);
    const Node w = intern(b);
    edges.emplace_back(u, w);
    if (end == text.size()) break;
  }
  if (labels.empty()) throw ParseError("edge list contains no edges");

  Graph g = Graph::from_edges(labels.size(), edges);
  g.set_labels(std::move(labels));
  return g;
}

Graph read_edge_list(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_edge_list(buffer.str());
}

std::string to_edge_list(const Graph& g) {
  std::string out;
  for (auto [u, w] : g.edges()) {
    out += g.label(u);
    out += '\t';
    out += g.label(w);
    out += '\n';
  }
  return out;
}

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("erdos_renyi needs at least one node");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0,1]");

  std::vector<Edge> edges;
  if (p == 1.0) {
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t w = u + 1; w < n; ++w) edges.emplace_back(static_cast<Node>(u), static_cast<Node>(w));
  } else if (p > 0.0) {
    // Geometric skipping over the pairs (w, v) with v < w (Batagelj & Brandes).
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double log_q = std::log1p(-p);
    long long v = 1;
    long long w = -1;
    const auto nn = static_cast<long long>(n);
    while (v < nn) {
      const double r = unit(rng);
      w += 1 + static_cast<long long>(std::floor(std::log1p(-r) / log_q));
      while (w >= v && v < nn) {
        w -= v;
        ++v;
      }
      if (v < nn) edges.emplace_back(static_cast<Node>(w), static_cast<Node>(v));
    }
  }
  return Graph::from_edges(n, edges);
}

Subgraph induced_subgraph(const Graph& g, std::span<const Node> nodes) {
  std::vector<Node> kept(nodes.begin(), nodes.end());
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());

  std::vector<Node> new_id(g.node_count(), -1);
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (kept[i] < 0 || static_cast<std::size_t>(kept[i]) >= g.node_count())
      throw std::out_of_range("node " + std::to_string(kept[i]) + " out of range");
    new_id[static_cast<std::size_t>(kept[i])] = static_cast<Node>(i);
  }

  std::vector<Edge> edges;
  for (Node u : kept)
    for (Node w : g.neighbours(u))
      if (w > u && new_id[static_cast<std::size_t>(w)] >= 0)
        edges.emplace_back(new_id[static_cast<std::size_t>(u)], new_id[static_cast<std::size_t>(w)]);

  Subgraph out{Graph::from_edges(kept.size(), edges), kept};
  if (!g.labels().empty()) {
    std::vector<std::string> labels;
    labels.reserve(kept.size());
    for (Node u : kept) labels.push_back(g.labels()[static_cast<std::size_t>(u)]);
    out.graph.set_labels(std::move(labels));
  }
  return out;
}

std::vector<std::vector<Node>> connected_components(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Node>> components;
  std::vector<Node> stack;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<Node> component;
    seen[start] = true;
    stack.push_back(static_cast<Node>(start));
    while (!stack.empty()) {
      Node u = stack.back();
      stack.pop_back();
      component.push_back(u);
      for (Node w : g.neighbours(u)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

Subgraph largest_component(const Graph& g) {
  if (g.node_count() == 0) throw std::invalid_argument("largest_component of an empty graph");
  auto components = connected_components(g);
  // Components come out ordered by smallest node, so the first maximum wins ties.
  std::size_t best = 0;
  for (std::size_t i = 1; i < components.size(); ++i)
    if (components[i].size() > components[best].size()) best = i;
  return induced_subgraph(g, components[best]);
}

}  // namespace syngraphy
