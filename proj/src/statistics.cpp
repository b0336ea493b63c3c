#include "syngraphy/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

#include "syngraphy/error.hpp"
#include "syngraphy/spectral.hpp"

namespace syngraphy {
namespace {

Count choose(Count d, int k) {
  if (d < k) return 0;
  Count out = 1;
  for (int i = 0; i < k; ++i) out = out * (d - i) / (i + 1);
  return out;
}

Count star_count(const Graph& g, int k) {
  Count total = 0;
  for (Count d : g.degrees()) total += choose(d, k);
  return total;
}

// Position of each node when sorted by (degree, id); edges are oriented from low to high rank.
std::vector<std::size_t> degree_rank(const Graph& g) {
  std::vector<Node> order(g.node_count());
  std::iota(order.begin(), order.end(), Node{0});
  std::sort(order.begin(), order.end(), [&](Node a, Node b) {
    return std::pair(g.degree(a), a) < std::pair(g.degree(b), b);
  });
  std::vector<std::size_t> rank(g.node_count());
  for (std::size_t i = 0; i < order.size(); ++i) rank[static_cast<std::size_t>(order[i])] = i;
  return rank;
}

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Count count_edges(const Graph& g) { return static_cast<Count>(g.edge_count()); }
Count count_wedges(const Graph& g) { return star_count(g, 2); }
Count count_claws(const Graph& g) { return star_count(g, 3); }
Count count_crosses(const Graph& g) { return star_count(g, 4); }

Count count_triangles(const Graph& g) {
  const std::size_t n = g.node_count();
  const auto rank = degree_rank(g);
  std::vector<std::vector<Node>> out(n);
  for (std::size_t u = 0; u < n; ++u)
    for (Node w : g.neighbours(static_cast<Node>(u)))
      if (rank[static_cast<std::size_t>(w)] > rank[u]) out[u].push_back(w);

  std::vector<std::uint8_t> mark(n, 0);
  Count total = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (Node w : out[u]) mark[static_cast<std::size_t>(w)] = 1;
    for (Node w : out[u])
      for (Node x : out[static_cast<std::size_t>(w)]) total += mark[static_cast<std::size_t>(x)];
    for (Node w : out[u]) mark[static_cast<std::size_t>(w)] = 0;
  }
  return total;
}

Count count_squares(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<Count> common(n, 0);
  std::vector<Node> touched;
  Count pair_sum = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (Node a : g.neighbours(static_cast<Node>(u))) {
      for (Node w : g.neighbours(a)) {
        if (static_cast<std::size_t>(w) <= u) continue;
        if (common[static_cast<std::size_t>(w)]++ == 0) touched.push_back(w);
      }
    }
    for (Node w : touched) {
      Count c = common[static_cast<std::size_t>(w)];
      pair_sum += c * (c - 1) / 2;
      common[static_cast<std::size_t>(w)] = 0;
    }
    touched.clear();
  }
  return pair_sum / 2;
}

Count count_paths3(const Graph& g) {
  Count total = 0;
  for (auto [u, w] : g.edges()) total += (g.degree(u) - 1) * (g.degree(w) - 1);
  return total - 3 * count_triangles(g);
}

CountVector subgraph_counts(const Graph& g) {
  return {count_edges(g),  count_wedges(g),    count_claws(g),
          count_crosses(g), count_triangles(g), count_squares(g)};
}

std::optional<double> clustering_coefficient(const Graph& g) {
  const Count s = count_wedges(g);
  if (s == 0) return std::nullopt;
  return 3.0 * static_cast<double>(count_triangles(g)) / static_cast<double>(s);
}

std::optional<double> four_clustering(const Graph& g) {
  const Count p3 = count_paths3(g);
  if (p3 == 0) return std::nullopt;
  return 4.0 * static_cast<double>(count_squares(g)) / static_cast<double>(p3);
}

std::optional<double> bipartivity(const Graph& g) {
  if (g.edge_count() == 0) return std::nullopt;
  const auto op = adjacency_operator(g);
  const auto top = lanczos_extreme(g.node_count(), op, SpectrumEnd::largest);
  const auto bottom = lanczos_extreme(g.node_count(), op, SpectrumEnd::smallest);
  if (!top.converged || !bottom.converged)
    throw NumericalError("adjacency eigensolver did not converge");
  return std::min(1.0, std::abs(bottom.value / top.value));
}

Count diameter(const Graph& g) {
  if (g.node_count() == 0) throw std::invalid_argument("diameter of a graph without nodes");
  const Graph core = largest_component(g).graph;
  const std::size_t n = core.node_count();

  // Breadth-first search from 64 sources at a time, one bit per source.
  Count best = 0;
  std::vector<std::uint64_t> visited(n), frontier(n), next(n);
  for (std::size_t base = 0; base < n; base += 64) {
    std::fill(visited.begin(), visited.end(), 0);
    std::fill(frontier.begin(), frontier.end(), 0);
    for (std::size_t i = 0; i < 64 && base + i < n; ++i) {
      visited[base + i] = std::uint64_t{1} << i;
      frontier[base + i] = visited[base + i];
    }
    Count level = 0;
    while (true) {
      bool any = false;
      for (std::size_t v = 0; v < n; ++v) {
        std::uint64_t reach = 0;
        for (Node w : core.neighbours(static_cast<Node>(v))) reach |= frontier[static_cast<std::size_t>(w)];
        next[v] = reach & ~visited[v];
        any = any || next[v] != 0;
      }
      if (!any) break;
      ++level;
      for (std::size_t v = 0; v < n; ++v) visited[v] |= next[v];
      frontier.swap(next);
    }
    best = std::max(best, level);
  }
  return best;
}

std::optional<double> assortativity(const Graph& g) {
  if (g.edge_count() == 0) return std::nullopt;
  // Sums over the 2m ordered incidences; both endpoint sequences have the same moments.
  __int128 sum = 0, sum_sq = 0, sum_cross = 0;
  for (auto [u, w] : g.edges()) {
    const __int128 du = g.degree(u), dw = g.degree(w);
    sum += du + dw;
    sum_sq += du * du + dw * dw;
    sum_cross += 2 * du * dw;
  }
  const __int128 count = 2 * static_cast<__int128>(g.edge_count());
  const __int128 variance = count * sum_sq - sum * sum;
  if (variance == 0) return std::nullopt;
  const __int128 covariance = count * sum_cross - sum * sum;
  return static_cast<double>(static_cast<long double>(covariance) / static_cast<long double>(variance));
}

StatVector full_stat_vector(const Graph& g) {
  StatVector out;
  out.n = static_cast<Count>(g.node_count());
  const CountVector counts = subgraph_counts(g);
  out.m = counts[kEdges];
  out.s = counts[kWedges];
  out.z = counts[kClaws];
  out.x = counts[kCrosses];
  out.t = counts[kTriangles];
  out.q = counts[kSquares];
  out.d = out.n > 0 ? 2.0 * static_cast<double>(out.m) / static_cast<double>(out.n) : 0.0;
  if (out.s > 0) out.c = 3.0 * static_cast<double>(out.t) / static_cast<double>(out.s);
  Count p3 = -3 * out.t;
  for (auto [u, w] : g.edges()) p3 += (g.degree(u) - 1) * (g.degree(w) - 1);
  if (p3 > 0) out.y = 4.0 * static_cast<double>(out.q) / static_cast<double>(p3);
  out.b = bipartivity(g);
  out.delta = diameter(g);
  out.rho = assortativity(g);
  return out;
}

namespace {

template <typename Emit>
void visit_stats(const StatVector& v, Emit&& emit) {
  emit("n", std::optional<double>{}, v.n);
  emit("m", std::optional<double>{}, v.m);
  emit("s", std::optional<double>{}, v.s);
  emit("z", std::optional<double>{}, v.z);
  emit("x", std::optional<double>{}, v.x);
  emit("t", std::optional<double>{}, v.t);
  emit("q", std::optional<double>{}, v.q);
  emit("d", std::optional<double>{v.d}, Count{-1});
  emit("c", v.c, Count{-1});
  emit("y", v.y, Count{-1});
  emit("b", v.b, Count{-1});
  emit("delta", std::optional<double>{}, v.delta);
  emit("rho", v.rho, Count{-1});
}

}  // namespace

std::string to_key_value(const StatVector& stats) {
  std::string out;
  visit_stats(stats, [&](std::string_view name, std::optional<double> real, Count integer) {
    out += name;
    out += '\t';
    if (integer >= 0)
      out += std::to_string(integer);
    else
      out += real ? format_real(*real) : "undefined";
    out += '\n';
  });
  return out;
}

std::string to_json(const StatVector& stats) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  visit_stats(stats, [&](std::string_view name, std::optional<double> real, Count integer) {
    const std::string key(name);
    if (integer >= 0)
      j[key] = integer;
    else if (real)
      j[key] = *real;
    else
      j[key] = "undefined";
  });
  return j.dump(2);
}

namespace {

struct PatternShape {
  int nodes;
  std::vector<std::pair<int, int>> edges;
};

PatternShape shape_of(Pattern p) {
  switch (p) {
    case Pattern::edge: return {2, {{0, 1}}};
    case Pattern::wedge: return {3, {{0, 1}, {0, 2}}};
    case Pattern::claw: return {4, {{0, 1}, {0, 2}, {0, 3}}};
    case Pattern::cross: return {5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}};
    case Pattern::triangle: return {3, {{0, 1}, {1, 2}, {0, 2}}};
    case Pattern::square: return {4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
    case Pattern::path3: return {4, {{0, 1}, {1, 2}, {2, 3}}};
  }
  throw std::invalid_argument("unknown pattern");
}

bool placement_fits(const PatternShape& shape, const std::vector<int>& placement,
                    const auto& adjacent) {
  for (auto [a, b] : shape.edges)
    if (!adjacent(placement[static_cast<std::size_t>(a)], placement[static_cast<std::size_t>(b)])) return false;
  return true;
}

// Calls visit(placement) for every sequence of `k` distinct values from 0..n-1.
template <typename Visit>
void for_each_injection(int n, int k, std::vector<int>& placement, std::vector<bool>& used, Visit&& visit) {
  if (static_cast<int>(placement.size()) == k) {
    visit(placement);
    return;
  }
  for (int v = 0; v < n; ++v) {
    if (used[static_cast<std::size_t>(v)]) continue;
    used[static_cast<std::size_t>(v)] = true;
    placement.push_back(v);
    for_each_injection(n, k, placement, used, visit);
    placement.pop_back();
    used[static_cast<std::size_t>(v)] = false;
  }
}

}  // namespace

Count brute_force_count(const Graph& g, Pattern pattern) {
  const auto n = static_cast<int>(g.node_count());
  if (n > 12) throw std::invalid_argument("brute_force_count is limited to 12 nodes");
  const PatternShape shape = shape_of(pattern);

  // Automorphisms: permutations of the pattern's nodes mapping its edge set onto itself.
  auto pattern_adjacent = [&](int a, int b) {
    for (auto [p, q] : shape.edges)
      if ((p == a && q == b) || (p == b && q == a)) return true;
    return false;
  };
  Count automorphisms = 0;
  {
    std::vector<int> perm;
    std::vector<bool> used(static_cast<std::size_t>(shape.nodes), false);
    for_each_injection(shape.nodes, shape.nodes, perm, used, [&](const std::vector<int>& p) {
      if (placement_fits(shape, p, pattern_adjacent)) ++automorphisms;
    });
  }

  std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (auto [u, w] : g.edges())
    adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] = adj[static_cast<std::size_t>(w)][static_cast<std::size_t>(u)] = true;
  auto graph_adjacent = [&](int a, int b) { return adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };

  Count placements = 0;
  if (shape.nodes <= n) {
    std::vector<int> placement;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for_each_injection(n, shape.nodes, placement, used, [&](const std::vector<int>& p) {
      if (placement_fits(shape, p, graph_adjacent)) ++placements;
    });
  }
  return placements / automorphisms;
}

}  // namespace syngraphy
