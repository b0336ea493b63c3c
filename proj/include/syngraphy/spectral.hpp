#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "syngraphy/graph.hpp"

namespace syngraphy {

/// y = M x for a symmetric operator M.
using SymmetricOperator = std::function<void(std::span<const double> x, std::span<double> y)>;

enum class SpectrumEnd { largest, smallest };

struct LanczosOptions {
  double tolerance = 1e-8;       // residual ||Mv - theta v|| relative to max(1, |theta|)
  int max_matvecs = 10000;
  std::size_t krylov_dim = 64;   // basis size before an explicit restart
  std::uint64_t seed = 0x5eed;
};

struct EigenPair {
  double value = 0.0;
  std::vector<double> vector;  // unit norm
  double residual = 0.0;
  int matvecs = 0;
  bool converged = false;
};

/// Extreme eigenpair of a symmetric operator on R^n, restricted to the orthogonal
/// complement of `deflate` (which must be orthonormal). Lanczos with full
/// reorthogonalisation and explicit restarts from the current Ritz vector.
EigenPair lanczos_extreme(std::size_t n, const SymmetricOperator& op, SpectrumEnd end,
                          std::span<const std::vector<double>> deflate = {},
                          const LanczosOptions& options = {});

/// x -> A x for the graph's adjacency matrix.
SymmetricOperator adjacency_operator(const Graph& g);

/// x -> (D - A) x for the graph's combinatorial Laplacian.
SymmetricOperator laplacian_operator(const Graph& g);

}  // namespace syngraphy
