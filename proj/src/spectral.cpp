#include "syngraphy/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace syngraphy {
namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += alpha * x[i];
}

void project_out(std::span<double> v, std::span<const std::vector<double>> basis) {
  for (const auto& b : basis) axpy(-dot(b, v), b, v);
}

}  // namespace

EigenPair lanczos_extreme(std::size_t n, const SymmetricOperator& op, SpectrumEnd end,
                          std::span<const std::vector<double>> deflate,
                          const LanczosOptions& options) {
  EigenPair result;
  if (n == 0) return result;

  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> gauss;
  std::vector<double> start(n);
  for (auto& v : start) v = gauss(rng);

  const std::size_t free_dims = n - std::min(n, deflate.size());
  if (free_dims == 0) return result;
  const std::size_t dim_cap = std::max<std::size_t>(2, std::min(options.krylov_dim, free_dims));

  std::vector<std::vector<double>> basis;
  std::vector<double> alpha, beta;
  std::vector<double> w(n);

  while (result.matvecs < options.max_matvecs) {
    // Two passes of projection keep the start vector numerically orthogonal.
    project_out(start, deflate);
    project_out(start, deflate);
    double start_norm = norm(start);
    if (start_norm < 1e-300) {
      for (auto& v : start) v = gauss(rng);
      continue;
    }
    for (auto& v : start) v /= start_norm;

    basis.assign(1, start);
    alpha.clear();
    beta.clear();

    bool invariant = false;
    while (basis.size() <= dim_cap && result.matvecs < options.max_matvecs) {
      const auto& q = basis.back();
      op(q, w);
      ++result.matvecs;
      const double a = dot(q, w);
      alpha.push_back(a);
      // Full reorthogonalisation against the deflated space and the basis, twice.
      for (int pass = 0; pass < 2; ++pass) {
        project_out(w, deflate);
        for (const auto& b : basis) axpy(-dot(b, w), b, w);
      }
      const double b = norm(w);
      if (b <= 1e-12 * std::max(1.0, std::abs(a)) || basis.size() == free_dims) {
        invariant = true;
        beta.push_back(0.0);
        break;
      }
      if (basis.size() == dim_cap) {
        beta.push_back(b);
        break;
      }
      beta.push_back(b);
      std::vector<double> next(n);
      for (std::size_t i = 0; i < n; ++i) next[i] = w[i] / b;
      basis.push_back(std::move(next));
    }

    const auto k = static_cast<Eigen::Index>(alpha.size());
    Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
      tri(i, i) = alpha[static_cast<std::size_t>(i)];
      if (i + 1 < k) tri(i, i + 1) = tri(i + 1, i) = beta[static_cast<std::size_t>(i)];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(tri);
    const Eigen::Index pick = end == SpectrumEnd::largest ? k - 1 : 0;
    const double theta = solver.eigenvalues()(pick);
    const Eigen::VectorXd s = solver.eigenvectors().col(pick);

    std::vector<double> ritz(n, 0.0);
    for (Eigen::Index j = 0; j < k; ++j) axpy(s(j), basis[static_cast<std::size_t>(j)], ritz);
    const double ritz_norm = norm(ritz);
    for (auto& v : ritz) v /= ritz_norm;

    result.value = theta;
    result.residual = std::abs(beta.back() * s(k - 1));
    result.vector = std::move(ritz);
    if (invariant || result.residual <= options.tolerance * std::max(1.0, std::abs(theta))) {
      result.converged = true;
      return result;
    }
    start = result.vector;
  }
  return result;
}

SymmetricOperator adjacency_operator(const Graph& g) {
  return [&g](std::span<const double> x, std::span<double> y) {
    for (std::size_t u = 0; u < g.node_count(); ++u) {
      double acc = 0.0;
      for (Node w : g.neighbours(static_cast<Node>(u))) acc += x[static_cast<std::size_t>(w)];
      y[u] = acc;
    }
  };
}

SymmetricOperator laplacian_operator(const Graph& g) {
  return [&g](std::span<const double> x, std::span<double> y) {
    for (std::size_t u = 0; u < g.node_count(); ++u) {
      double acc = static_cast<double>(g.degree(static_cast<Node>(u))) * x[u];
      for (Node w : g.neighbours(static_cast<Node>(u))) acc -= x[static_cast<std::size_t>(w)];
      y[u] = acc;
    }
  };
}

}  // namespace syngraphy
