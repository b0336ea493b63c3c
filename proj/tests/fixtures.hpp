#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "syngraphy/graph.hpp"

namespace syngraphy::fixtures {

inline Graph complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int w = u + 1; w < n; ++w) e.emplace_back(u, w);
  return Graph::from_edges(static_cast<std::size_t>(n), e);
}

inline Graph cycle(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u) e.emplace_back(u, (u + 1) % n);
  return Graph::from_edges(static_cast<std::size_t>(n), e);
}

inline Graph path(int n) {
  std::vector<Edge> e;
  for (int u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  return Graph::from_edges(static_cast<std::size_t>(n), e);
}

/// K_{1,k}: hub 0 with leaves 1..k.
inline Graph star(int k) {
  std::vector<Edge> e;
  for (int w = 1; w <= k; ++w) e.emplace_back(0, w);
  return Graph::from_edges(static_cast<std::size_t>(k + 1), e);
}

inline Graph complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int u = 0; u < a; ++u)
    for (int w = 0; w < b; ++w) e.emplace_back(u, a + w);
  return Graph::from_edges(static_cast<std::size_t>(a + b), e);
}

/// Random graph with a random size in [min_n, max_n] and a random density, for property sweeps.
inline Graph random_small(std::mt19937_64& rng, int min_n, int max_n) {
  std::uniform_int_distribution<int> size(min_n, max_n);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  const int n = size(rng);
  return erdos_renyi(static_cast<std::size_t>(n), density(rng), rng());
}

}  // namespace syngraphy::fixtures
