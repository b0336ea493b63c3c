#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "syngraphy/layout.hpp"
#include "syngraphy/render.hpp"

using namespace syngraphy;
namespace fx = syngraphy::fixtures;

namespace {

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++count;
  return count;
}

bool inside_unit_square(const Layout& layout) {
  for (const auto& p : layout.coordinates)
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || p.x < 0 || p.x > 1 || p.y < 0 || p.y > 1) return false;
  return true;
}

}  // namespace

TEST_CASE("fruchterman_reingold") {
  SUBCASE("single edge ends apart") {
    const Layout layout = fruchterman_reingold(fx::path(2), 1);
    const auto& c = layout.coordinates;
    CHECK(std::hypot(c[0].x - c[1].x, c[0].y - c[1].y) > 0.1);
  }
  SUBCASE("single node is centred") {
    const Layout layout = fruchterman_reingold(Graph(1), 1);
    CHECK(layout.coordinates[0] == Point{0.5, 0.5});
  }
  SUBCASE("deterministic per seed") {
    const Graph g = erdos_renyi(30, 0.1, 4);
    CHECK(fruchterman_reingold(g, 7).coordinates == fruchterman_reingold(g, 7).coordinates);
    CHECK(fruchterman_reingold(g, 7).coordinates != fruchterman_reingold(g, 8).coordinates);
  }
  SUBCASE("total on random graphs") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 100; ++i) {
      const Graph g = fx::random_small(rng, 1, 40);
      FrOptions options;
      options.iterations = 100;
      const Layout layout = fruchterman_reingold(g, rng(), options);
      REQUIRE(layout.coordinates.size() == g.node_count());
      CHECK(inside_unit_square(layout));
    }
  }
  SUBCASE("neighbours end up closer than non-neighbours on a long path") {
    const Layout layout = fruchterman_reingold(fx::path(10), 3);
    const auto& c = layout.coordinates;
    double adjacent = 0.0;
    for (int i = 0; i + 1 < 10; ++i) adjacent += std::hypot(c[i].x - c[i + 1].x, c[i].y - c[i + 1].y);
    CHECK(adjacent / 9 < std::hypot(c[0].x - c[9].x, c[0].y - c[9].y));
  }
}

TEST_CASE("laplacian_embedding: path follows the analytic Fiedler vector") {
  const int n = 12;
  const Layout layout = laplacian_embedding(fx::path(n), 0);
  CHECK(inside_unit_square(layout));
  // Fiedler vector of P_n: cos(pi (i + 1/2) / n), up to sign and the per-axis normalisation.
  const double extreme = std::cos(std::numbers::pi / (2.0 * n));
  const bool increasing = layout.coordinates[0].x < layout.coordinates[n - 1].x;
  for (int i = 0; i < n; ++i) {
    const double f = std::cos(std::numbers::pi * (i + 0.5) / n) * (increasing ? -1.0 : 1.0);
    const auto at = static_cast<std::size_t>(i);
    CHECK(layout.coordinates[at].x == doctest::Approx((f + extreme) / (2.0 * extreme)).epsilon(1e-6));
    if (i > 0) CHECK((layout.coordinates[at].x > layout.coordinates[at - 1].x) == increasing);
  }
}

TEST_CASE("laplacian_embedding: cycle lands on a circle") {
  const int n = 24;
  const Layout layout = laplacian_embedding(fx::cycle(n), 0);
  double mean = 0.0;
  std::vector<double> radius;
  for (const auto& p : layout.coordinates) {
    radius.push_back(std::hypot(p.x - 0.5, p.y - 0.5));
    mean += radius.back();
  }
  mean /= n;
  for (double r : radius) CHECK(std::abs(r - mean) < 0.05 * mean);
}

TEST_CASE("laplacian_embedding: determinism, sign rule and errors") {
  const Graph g = largest_component(erdos_renyi(60, 0.1, 21)).graph;
  CHECK(laplacian_embedding(g, 1).coordinates == laplacian_embedding(g, 1).coordinates);
  CHECK_THROWS_AS((void)laplacian_embedding(Graph::from_edges(4, std::vector<Edge>{{0, 1}, {2, 3}}), 0),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)laplacian_embedding(fx::path(2), 0), std::invalid_argument);
}

TEST_CASE("laplacian_embedding: iterative solver agrees with the dense one") {
  const Graph g = largest_component(erdos_renyi(200, 0.05, 5)).graph;
  const Layout dense = laplacian_embedding(g, 3);
  const Layout iterative = laplacian_embedding(g, 3, true);
  REQUIRE(dense.coordinates.size() == iterative.coordinates.size());
  for (std::size_t i = 0; i < dense.coordinates.size(); ++i) {
    CHECK(iterative.coordinates[i].x == doctest::Approx(dense.coordinates[i].x).epsilon(1e-5));
    CHECK(iterative.coordinates[i].y == doctest::Approx(dense.coordinates[i].y).epsilon(1e-5));
  }
}

TEST_CASE("normalisation commutes with per-axis affine maps") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-5, 5);
  std::vector<Point> a(20);
  for (auto& p : a) p = {u(rng), u(rng)};
  std::vector<Point> b = a;
  for (auto& p : b) p = {3.0 * p.x - 7.0, 0.25 * p.y + 100.0};
  normalise_unit_square(a);
  normalise_unit_square(b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].x == doctest::Approx(b[i].x));
    CHECK(a[i].y == doctest::Approx(b[i].y));
  }
  std::vector<Point> flat{{1, 2}, {1, 3}};
  normalise_unit_square(flat);
  CHECK(flat[0].x == 0.5);
  CHECK(flat[1].y == 1.0);
}

TEST_CASE("coordinate files round trip") {
  const Graph g = from_edge_list("a b\nb c\nc d\n");
  const Layout layout = fruchterman_reingold(g, 5);
  const Layout back = parse_coordinates(g, format_coordinates(g, layout));
  CHECK(back.coordinates == layout.coordinates);
  CHECK_THROWS((void)parse_coordinates(g, "a 0 0\nb 0 0\n"));
  CHECK_THROWS((void)parse_coordinates(g, "zz 0 0\n"));
}

TEST_CASE("render_svg") {
  const Graph triangle = fx::complete(3);
  const Layout fixed{{{0, 0}, {1, 0}, {0.5, 1}}, LayoutMethod::fr, 0};
  const std::string svg = render_svg(triangle, fixed);
  CHECK(occurrences(svg, "<circle") == 3);
  CHECK(occurrences(svg, "<line") == 3);
  CHECK(svg.find("viewBox=\"0 0 1000 1000\"") != std::string::npos);
  CHECK(svg.find("cx=\"50.000\" cy=\"50.000\"") != std::string::npos);
  CHECK(svg.find("cx=\"950.000\" cy=\"50.000\"") != std::string::npos);

  const std::string empty = render_svg(Graph{}, Layout{});
  CHECK(occurrences(empty, "<circle") == 0);
  CHECK(occurrences(empty, "<line") == 0);
  CHECK(empty.find("</svg>") != std::string::npos);

  CHECK_THROWS_AS((void)render_svg(triangle, Layout{{{0, 0}}, LayoutMethod::fr, 0}), std::invalid_argument);

  std::mt19937_64 rng(6);
  for (int i = 0; i < 20; ++i) {
    const Graph g = fx::random_small(rng, 1, 30);
    const std::string doc = render_svg(g, fruchterman_reingold(g, 1, FrOptions{50, 1.0}));
    CHECK(occurrences(doc, "<circle") == g.node_count());
    CHECK(occurrences(doc, "<line") == g.edge_count());
  }
}

// Writes SVG documents for the external XML well-formedness check (see tests/CMakeLists.txt).
TEST_CASE("write_svg_cases") {
  const char* dir = std::getenv("SYNGRAPHY_SVG_DIR");
  if (dir == nullptr) return;
  std::filesystem::create_directories(dir);
  std::mt19937_64 rng(50);
  for (int i = 0; i < 50; ++i) {
    Graph g = fx::random_small(rng, 1, 40);
    std::vector<std::string> labels;
    for (std::size_t u = 0; u < g.node_count(); ++u) labels.push_back(u % 3 == 0 ? "<n&" + std::to_string(u) + "\">" : "n" + std::to_string(u));
    g.set_labels(labels);
    const Layout layout = (i % 2 == 0 || g.node_count() < 3) ? fruchterman_reingold(g, rng(), FrOptions{100, 1.0})
                                                             : fruchterman_reingold(g, rng());
    std::ofstream(std::filesystem::path(dir) / ("case" + std::to_string(i) + ".svg")) << render_svg(g, layout);
    std::ofstream(std::filesystem::path(dir) / ("case" + std::to_string(i) + ".counts"))
        << g.node_count() << ' ' << g.edge_count() << '\n';
  }
}
