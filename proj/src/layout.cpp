#include "syngraphy/layout.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "syngraphy/error.hpp"
#include "syngraphy/spectral.hpp"

namespace syngraphy {
namespace {

void fix_sign(std::vector<double>& v) {
  std::size_t pivot = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (std::abs(v[i]) > std::abs(v[pivot]) + 1e-12) pivot = i;
  if (v[pivot] < 0)
    for (auto& x : v) x = -x;
}

std::pair<std::vector<double>, std::vector<double>> dense_fiedler_pair(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.node_count());
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index u = 0; u < n; ++u) {
    lap(u, u) = static_cast<double>(g.degree(static_cast<Node>(u)));
    for (Node w : g.neighbours(static_cast<Node>(u))) lap(u, w) = -1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap);
  if (solver.info() != Eigen::Success) throw NumericalError("Laplacian eigendecomposition failed");
  auto column = [&](Eigen::Index c) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = solver.eigenvectors()(i, c);
    return v;
  };
  return {column(1), column(2)};
}

std::pair<std::vector<double>, std::vector<double>> iterative_fiedler_pair(const Graph& g, std::uint64_t seed) {
  const std::size_t n = g.node_count();
  // Smallest Laplacian eigenvalues are the largest of shift*I - L, shift >= lambda_max(L).
  std::int64_t max_degree = 0;
  for (std::int64_t d : g.degrees()) max_degree = std::max(max_degree, d);
  const double shift = 2.0 * static_cast<double>(max_degree);
  const SymmetricOperator lap = laplacian_operator(g);
  const SymmetricOperator flipped = [&](std::span<const double> x, std::span<double> y) {
    lap(x, y);
    for (std::size_t i = 0; i < n; ++i) y[i] = shift * x[i] - y[i];
  };

  LanczosOptions options;
  options.seed = seed;
  options.krylov_dim = 128;
  options.max_matvecs = 10000;
  std::vector<std::vector<double>> deflate{std::vector<double>(n, 1.0 / std::sqrt(static_cast<double>(n)))};
  auto second = lanczos_extreme(n, flipped, SpectrumEnd::largest, deflate, options);
  if (!second.converged) throw NumericalError("Laplacian eigensolver did not converge (2nd eigenvector)");
  deflate.push_back(second.vector);
  auto third = lanczos_extreme(n, flipped, SpectrumEnd::largest, deflate, options);
  if (!third.converged) throw NumericalError("Laplacian eigensolver did not converge (3rd eigenvector)");
  return {std::move(second.vector), std::move(third.vector)};
}

}  // namespace

void normalise_unit_square(std::vector<Point>& points) {
  if (points.empty()) return;
  auto rescale = [&](double Point::*axis) {
    double lo = points.front().*axis, hi = lo;
    for (const auto& p : points) {
      lo = std::min(lo, p.*axis);
      hi = std::max(hi, p.*axis);
    }
    const double extent = hi - lo;
    for (auto& p : points) p.*axis = extent > 1e-12 * std::max(1.0, std::abs(hi)) ? (p.*axis - lo) / extent : 0.5;
  };
  rescale(&Point::x);
  rescale(&Point::y);
}

Layout fruchterman_reingold(const Graph& g, std::uint64_t seed, const FrOptions& options) {
  const std::size_t n = g.node_count();
  Layout layout{std::vector<Point>(n), LayoutMethod::fr, seed};
  if (n == 0) return layout;
  if (n == 1) {
    layout.coordinates[0] = {0.5, 0.5};
    return layout;
  }

  const double side = std::sqrt(options.area);
  const double k = std::sqrt(options.area / static_cast<double>(n));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, side);
  auto& pos = layout.coordinates;
  for (auto& p : pos) {
    p.x = unit(rng);
    p.y = unit(rng);
  }

  const auto edges = g.edges();
  std::vector<Point> disp(n);
  const double start_temperature = side / 10.0;
  for (std::size_t it = 0; it < options.iterations; ++it) {
    const double temperature =
        start_temperature * (1.0 - static_cast<double>(it) / static_cast<double>(options.iterations));
    std::fill(disp.begin(), disp.end(), Point{});

    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        double dx = pos[i].x - pos[j].x;
        double dy = pos[i].y - pos[j].y;
        double dist = std::hypot(dx, dy);
        if (dist < 1e-9) {
          // Coincident nodes: push apart along a fixed, index-dependent direction.
          const double angle = static_cast<double>(i * 31 + j * 17);
          dx = 1e-9 * std::cos(angle);
          dy = 1e-9 * std::sin(angle);
          dist = 1e-9;
        }
        const double force = k * k / dist;
        disp[i].x += dx / dist * force;
        disp[i].y += dy / dist * force;
        disp[j].x -= dx / dist * force;
        disp[j].y -= dy / dist * force;
      }
    }
    for (auto [u, w] : edges) {
      auto& pu = pos[static_cast<std::size_t>(u)];
      auto& pw = pos[static_cast<std::size_t>(w)];
      const double dx = pu.x - pw.x;
      const double dy = pu.y - pw.y;
      const double dist = std::hypot(dx, dy);
      if (dist < 1e-12) continue;
      const double force = dist * dist / k;
      disp[static_cast<std::size_t>(u)].x -= dx / dist * force;
      disp[static_cast<std::size_t>(u)].y -= dy / dist * force;
      disp[static_cast<std::size_t>(w)].x += dx / dist * force;
      disp[static_cast<std::size_t>(w)].y += dy / dist * force;
    }
    for (std::size_t i = 0; i < n; ++i) {
      const double len = std::hypot(disp[i].x, disp[i].y);
      if (len < 1e-300) continue;
      const double step = std::min(len, temperature);
      pos[i].x = std::clamp(pos[i].x + disp[i].x / len * step, 0.0, side);
      pos[i].y = std::clamp(pos[i].y + disp[i].y / len * step, 0.0, side);
    }
  }
  normalise_unit_square(pos);
  return layout;
}

Layout laplacian_embedding(const Graph& g, std::uint64_t seed, bool force_iterative) {
  const std::size_t n = g.node_count();
  if (n < 3) throw std::invalid_argument("Laplacian embedding needs at least 3 nodes");
  if (connected_components(g).size() != 1)
    throw std::invalid_argument("Laplacian embedding needs a connected graph; take the largest component first");

  auto [xs, ys] = (n <= kDenseLaplacianLimit && !force_iterative) ? dense_fiedler_pair(g)
                                                                   : iterative_fiedler_pair(g, seed);
  fix_sign(xs);
  fix_sign(ys);
  Layout layout{std::vector<Point>(n), LayoutMethod::la, seed};
  for (std::size_t i = 0; i < n; ++i) layout.coordinates[i] = {xs[i], ys[i]};
  normalise_unit_square(layout.coordinates);
  return layout;
}

std::string format_coordinates(const Graph& g, const Layout& layout) {
  if (layout.coordinates.size() != g.node_count())
    throw std::invalid_argument("layout does not cover every node");
  std::string out;
  char buf[80];
  for (std::size_t u = 0; u < g.node_count(); ++u) {
    std::snprintf(buf, sizeof buf, "\t%.17g\t%.17g\n", layout.coordinates[u].x, layout.coordinates[u].y);
    out += g.label(static_cast<Node>(u));
    out += buf;
  }
  return out;
}

Layout parse_coordinates(const Graph& g, std::string_view text) {
  std::unordered_map<std::string, Node> ids;
  for (std::size_t u = 0; u < g.node_count(); ++u) ids.emplace(g.label(static_cast<Node>(u)), static_cast<Node>(u));

  Layout layout{std::vector<Point>(g.node_count()), LayoutMethod::fr, 0};
  std::vector<bool> seen(g.node_count(), false);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string name;
    Point p;
    if (!(fields >> name >> p.x >> p.y)) throw ParseError("expected node, x, y", line_no);
    auto it = ids.find(name);
    if (it == ids.end()) throw ParseError("unknown node '" + name + "'", line_no);
    layout.coordinates[static_cast<std::size_t>(it->second)] = p;
    seen[static_cast<std::size_t>(it->second)] = true;
  }
  for (std::size_t u = 0; u < seen.size(); ++u)
    if (!seen[u]) throw ParseError("no coordinates for node '" + g.label(static_cast<Node>(u)) + "'");
  return layout;
}

}  // namespace syngraphy
