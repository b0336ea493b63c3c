#include "syngraphy/generator.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

namespace syngraphy {
namespace {

struct Columns {
  std::vector<Count> column;  // A_{:u}
  Count du = 0;
};

Columns column_of(const Graph& g, Node u) { return {g.adjacency_column(u), g.degree(u)}; }

// A * A_{:u}: common-neighbour counts with u.
std::vector<Count> two_step(const Graph& g, Node u) {
  std::vector<Count> out(g.node_count(), 0);
  for (Node a : g.neighbours(u))
    for (Node b : g.neighbours(a)) ++out[static_cast<std::size_t>(b)];
  return out;
}

// A * v for a count vector v.
std::vector<Count> multiply(const Graph& g, const std::vector<Count>& v) {
  std::vector<Count> out(g.node_count(), 0);
  for (std::size_t b = 0; b < v.size(); ++b) {
    if (v[b] == 0) continue;
    for (Node c : g.neighbours(static_cast<Node>(b))) out[static_cast<std::size_t>(c)] += v[b];
  }
  return out;
}

Count edge_delta(Count a) { return 1 - 2 * a; }

Count claw_delta(Count a, Count d, Count du) {
  return edge_delta(a) * ((d - a) * (d - 1 - a) + (du - a) * (du - 1 - a)) / 2;
}

Count cross_delta(Count a, Count d, Count du) {
  return ((d - 1) * (d - 2) * (a * (3 - 2 * d) + d) + (du - 1) * (du - 2) * ((3 - 2 * du) * a + du)) / 6;
}

}  // namespace

std::size_t patience(std::size_t n_prime, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in (0,1)");
  if (n_prime < 2) throw std::invalid_argument("n' must be at least 2");
  return static_cast<std::size_t>(std::ceil(-static_cast<double>(n_prime) * std::log(epsilon)));
}

DeltaVector delta_edges(const Graph& g, Node u) {
  auto [col, du] = column_of(g, u);
  DeltaVector out(col.size());
  for (std::size_t w = 0; w < col.size(); ++w) out[w] = edge_delta(col[w]);
  return out;
}

DeltaVector delta_wedges(const Graph& g, Node u) {
  auto [col, du] = column_of(g, u);
  const auto& d = g.degrees();
  DeltaVector out(col.size());
  for (std::size_t w = 0; w < col.size(); ++w) out[w] = edge_delta(col[w]) * (d[w] + du) + 2 * col[w];
  return out;
}

DeltaVector delta_claws(const Graph& g, Node u) {
  auto [col, du] = column_of(g, u);
  const auto& d = g.degrees();
  DeltaVector out(col.size());
  for (std::size_t w = 0; w < col.size(); ++w) out[w] = claw_delta(col[w], d[w], du);
  return out;
}

DeltaVector delta_crosses(const Graph& g, Node u) {
  auto [col, du] = column_of(g, u);
  const auto& d = g.degrees();
  DeltaVector out(col.size());
  for (std::size_t w = 0; w < col.size(); ++w) out[w] = cross_delta(col[w], d[w], du);
  return out;
}

DeltaVector delta_triangles(const Graph& g, Node u) {
  auto [col, du] = column_of(g, u);
  DeltaVector out = two_step(g, u);
  for (std::size_t w = 0; w < col.size(); ++w) out[w] *= edge_delta(col[w]);
  return out;
}

DeltaVector delta_squares(const Graph& g, Node u) {
  auto [col, du] = column_of(g, u);
  const auto& d = g.degrees();
  DeltaVector out = multiply(g, two_step(g, u));
  for (std::size_t w = 0; w < col.size(); ++w) out[w] = out[w] * edge_delta(col[w]) + col[w] * (d[w] + du - 1);
  return out;
}

std::array<DeltaVector, kNumCounts> all_deltas(const Graph& g, Node u) {
  const std::size_t n = g.node_count();
  auto [col, du] = column_of(g, u);
  const auto& d = g.degrees();
  const std::vector<Count> paths2 = two_step(g, u);
  const std::vector<Count> paths3 = multiply(g, paths2);

  std::array<DeltaVector, kNumCounts> out;
  for (auto& v : out) v.resize(n);
  for (std::size_t w = 0; w < n; ++w) {
    const Count a = col[w];
    const Count dm = edge_delta(a);
    out[kEdges][w] = dm;
    out[kWedges][w] = dm * (d[w] + du) + 2 * a;
    out[kClaws][w] = claw_delta(a, d[w], du);
    out[kCrosses][w] = cross_delta(a, d[w], du);
    out[kTriangles][w] = paths2[w] * dm;
    out[kSquares][w] = paths3[w] * dm + a * (d[w] + du - 1);
  }
  return out;
}

double relative_error(const CountVector& current, const std::array<double, kNumCounts>& targets) {
  double e = 0.0;
  for (std::size_t i = 0; i < kNumCounts; ++i) {
    const double r = (static_cast<double>(current[i]) - targets[i]) / std::max(std::abs(targets[i]), 1.0);
    e += r * r;
  }
  return e;
}

GenerateResult generate(const TargetStats& targets, const GeneratorConfig& config) {
  const std::size_t n = config.n_prime;
  const std::size_t window = patience(n, config.epsilon);
  if (targets.n_prime != n)
    throw std::invalid_argument("target node count " + std::to_string(targets.n_prime) +
                                " does not match generator n' = " + std::to_string(n));
  for (double t : targets.targets)
    if (!(t >= 0.0) || !std::isfinite(t)) throw std::invalid_argument("targets must be finite and non-negative");

  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  const double p = std::clamp(targets.targets[kEdges] / pairs, 0.0, 1.0);
  const Graph initial = erdos_renyi(n, p, config.seed);

  Graph g = initial;
  CountVector current = subgraph_counts(g);
  std::array<double, kNumCounts> scale{};
  for (std::size_t i = 0; i < kNumCounts; ++i) scale[i] = 1.0 / std::max(std::abs(targets.targets[i]), 1.0);

  double error = relative_error(current, targets.targets);
  double best_error = error;
  CountVector best_counts = current;
  std::size_t best_iteration = 0;
  std::size_t since_best = 0;

  GenerateResult result;
  result.trace.push_back({0, error, best_error});
  std::vector<Edge> toggles;

  std::mt19937_64 rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);

  std::size_t iteration = 0;
  while (since_best < window) {
    if (iteration >= config.max_iterations) {
      result.hit_iteration_cap = true;
      break;
    }
    ++iteration;
    const auto u = static_cast<Node>(pick(rng));
    const auto deltas = all_deltas(g, u);

    Node best_w = -1;
    double best_candidate = 0.0;
    for (std::size_t w = 0; w < n; ++w) {
      if (static_cast<Node>(w) == u) continue;
      double e = 0.0;
      for (std::size_t i = 0; i < kNumCounts; ++i) {
        const double r = (static_cast<double>(current[i] + deltas[i][w]) - targets.targets[i]) * scale[i];
        e += r * r;
      }
      if (best_w < 0 || e < best_candidate) {
        best_w = static_cast<Node>(w);
        best_candidate = e;
      }
    }

    g.toggle_edge(u, best_w);
    toggles.emplace_back(u, best_w);
    for (std::size_t i = 0; i < kNumCounts; ++i) current[i] += deltas[i][static_cast<std::size_t>(best_w)];
    error = relative_error(current, targets.targets);
    assert(iteration % 1000 != 0 || current == subgraph_counts(g));

    if (error < best_error) {
      best_error = error;
      best_counts = current;
      best_iteration = iteration;
      since_best = 0;
    } else {
      ++since_best;
    }
    result.trace.push_back({iteration, error, best_error});
  }

  Graph best = initial;
  for (std::size_t i = 0; i < best_iteration; ++i) best.toggle_edge(toggles[i].first, toggles[i].second);

  result.graph = std::move(best);
  result.error = best_error;
  result.counts = best_counts;
  result.final_graph = std::move(g);
  result.final_error = error;
  result.iterations = iteration;
  return result;
}

std::string format_trace(std::span<const TraceEntry> trace) {
  std::string out;
  char buf[96];
  for (const auto& entry : trace) {
    std::snprintf(buf, sizeof buf, "%zu\t%.17g\t%.17g\n", entry.iteration, entry.error, entry.best_error);
    out += buf;
  }
  return out;
}

}  // namespace syngraphy
