#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "syngraphy/graph.hpp"
#include "syngraphy/scaling.hpp"
#include "syngraphy/statistics.hpp"

namespace syngraphy {

struct GeneratorConfig {
  double epsilon = 0.01;
  std::size_t n_prime = 80;
  std::uint64_t seed = 0;
  std::size_t max_iterations = 1'000'000;
};

/// Number of consecutive non-improving iterations after which the search stops:
/// ceil(-n' ln epsilon). Throws std::invalid_argument unless 0 < epsilon < 1 and n' >= 2.
std::size_t patience(std::size_t n_prime, double epsilon);

/// Change of one count for toggling {u, w}, indexed by w. Entry u is meaningless.
using DeltaVector = std::vector<Count>;

DeltaVector delta_edges(const Graph& g, Node u);
DeltaVector delta_wedges(const Graph& g, Node u);
DeltaVector delta_claws(const Graph& g, Node u);
DeltaVector delta_crosses(const Graph& g, Node u);
DeltaVector delta_triangles(const Graph& g, Node u);
DeltaVector delta_squares(const Graph& g, Node u);

/// All six delta vectors for node u, in CountIndex order, sharing the column,
/// degree and A*A_u / A^2*A_u products between them.
std::array<DeltaVector, kNumCounts> all_deltas(const Graph& g, Node u);

/// Sum over the six counts of ((current - target) / max(|target|, 1))^2.
double relative_error(const CountVector& current, const std::array<double, kNumCounts>& targets);

struct TraceEntry {
  std::size_t iteration = 0;
  double error = 0.0;
  double best_error = 0.0;
};

struct GenerateResult {
  Graph graph;                 // best-error snapshot
  double error = 0.0;          // error of `graph`
  CountVector counts{};        // counts of `graph`
  Graph final_graph;           // graph when the loop stopped
  double final_error = 0.0;
  std::vector<TraceEntry> trace;  // entry 0 is the initial random graph
  std::size_t iterations = 0;
  bool hit_iteration_cap = false;
};

/// Starts from G(n', m'/C(n',2)) and repeatedly toggles the edge {u, v} that
/// minimises relative_error, for a uniformly random u and the best v != u (ties
/// to the smaller v). Stops after `patience` iterations without a new minimum.
/// Throws std::invalid_argument for an invalid config or when
/// config.n_prime != targets.n_prime.
GenerateResult generate(const TargetStats& targets, const GeneratorConfig& config);

/// "iteration<TAB>error<TAB>best_error" lines.
std::string format_trace(std::span<const TraceEntry> trace);

}  // namespace syngraphy
