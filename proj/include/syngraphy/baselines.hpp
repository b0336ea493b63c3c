#pragma once

#include <cstddef>
#include <cstdint>

#include "syngraphy/graph.hpp"

namespace syngraphy {

/// Picks k nodes uniformly without replacement and keeps every edge with at
/// least one chosen endpoint, together with the endpoints those edges reach.
/// Throws std::invalid_argument unless 1 <= k <= n.
Subgraph uniform_vertex_sample(const Graph& g, std::size_t k, std::uint64_t seed);

/// Subgraph induced by k nodes drawn uniformly without replacement; isolated
/// nodes stay. Throws std::invalid_argument unless 1 <= k <= n.
Subgraph node_sample(const Graph& g, std::size_t k, std::uint64_t seed);

/// Expected node count of uniform_vertex_sample(g, k, .): the expected size of a
/// random k-set's closed neighbourhood.
double expected_closed_neighbourhood(const Graph& g, std::size_t k);

/// Smallest k whose expected uniform_vertex_sample size reaches `nodes`
/// (bisection over k; the expectation is monotone in k). Clamped to [1, n].
std::size_t uniform_vertex_budget(const Graph& g, std::size_t nodes);

/// node_sample budget giving `nodes` nodes: min(nodes, n), at least 1.
std::size_t node_sample_budget(const Graph& g, std::size_t nodes);

}  // namespace syngraphy
