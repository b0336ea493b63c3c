#include "syngraphy/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace syngraphy {
namespace {

void check_budget(const Graph& g, std::size_t k) {
  if (k < 1 || k > g.node_count())
    throw std::invalid_argument("sample size " + std::to_string(k) + " outside [1, " +
                                std::to_string(g.node_count()) + "]");
}

std::vector<Node> choose_nodes(std::size_t n, std::size_t k, std::uint64_t seed) {
  std::vector<Node> all(n);
  std::iota(all.begin(), all.end(), Node{0});
  std::mt19937_64 rng(seed);
  // Partial Fisher-Yates: the first k slots are a uniform k-subset.
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, n - 1);
    std::swap(all[i], all[pick(rng)]);
  }
  all.resize(k);
  std::sort(all.begin(), all.end());
  return all;
}

double log_choose(double n, double k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

}  // namespace

Subgraph uniform_vertex_sample(const Graph& g, std::size_t k, std::uint64_t seed) {
  check_budget(g, k);
  const std::vector<Node> chosen = choose_nodes(g.node_count(), k, seed);
  std::vector<bool> is_chosen(g.node_count(), false);
  for (Node u : chosen) is_chosen[static_cast<std::size_t>(u)] = true;

  std::vector<Node> kept = chosen;
  for (Node u : chosen)
    for (Node w : g.neighbours(u)) kept.push_back(w);
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());

  std::vector<Node> new_id(g.node_count(), -1);
  for (std::size_t i = 0; i < kept.size(); ++i) new_id[static_cast<std::size_t>(kept[i])] = static_cast<Node>(i);

  std::vector<Edge> edges;
  for (Node u : chosen)
    for (Node w : g.neighbours(u))
      if (!is_chosen[static_cast<std::size_t>(w)] || w > u)
        edges.emplace_back(new_id[static_cast<std::size_t>(u)], new_id[static_cast<std::size_t>(w)]);

  Subgraph out{Graph::from_edges(kept.size(), edges), kept};
  if (!g.labels().empty()) {
    std::vector<std::string> labels;
    for (Node u : kept) labels.push_back(g.labels()[static_cast<std::size_t>(u)]);
    out.graph.set_labels(std::move(labels));
  }
  return out;
}

Subgraph node_sample(const Graph& g, std::size_t k, std::uint64_t seed) {
  check_budget(g, k);
  return induced_subgraph(g, choose_nodes(g.node_count(), k, seed));
}

double expected_closed_neighbourhood(const Graph& g, std::size_t k) {
  const auto n = static_cast<double>(g.node_count());
  const auto kk = static_cast<double>(k);
  double total = 0.0;
  for (std::int64_t d : g.degrees()) {
    // P(v outside the closed neighbourhood) = C(n-1-d, k) / C(n, k).
    const double free = n - 1.0 - static_cast<double>(d);
    const double miss = free < kk ? 0.0 : std::exp(log_choose(free, kk) - log_choose(n, kk));
    total += 1.0 - miss;
  }
  return total;
}

std::size_t uniform_vertex_budget(const Graph& g, std::size_t nodes) {
  const std::size_t n = g.node_count();
  if (n == 0) throw std::invalid_argument("cannot sample from an empty graph");
  std::size_t lo = 1, hi = n;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (expected_closed_neighbourhood(g, mid) >= static_cast<double>(nodes))
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

std::size_t node_sample_budget(const Graph& g, std::size_t nodes) {
  if (g.node_count() == 0) throw std::invalid_argument("cannot sample from an empty graph");
  return std::clamp<std::size_t>(nodes, 1, g.node_count());
}

}  // namespace syngraphy
