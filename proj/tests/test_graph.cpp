#include <cmath>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "syngraphy/error.hpp"
#include "syngraphy/graph.hpp"

using namespace syngraphy;

namespace {

std::vector<std::int64_t> recount_degrees(const Graph& g) {
  std::vector<std::int64_t> d(g.node_count(), 0);
  for (auto [u, w] : g.edges()) {
    ++d[static_cast<std::size_t>(u)];
    ++d[static_cast<std::size_t>(w)];
  }
  return d;
}

}  // namespace

TEST_CASE("edge list parsing") {
  SUBCASE("triangle") {
    Graph g = from_edge_list("a b\nb c\nc a");
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.label(0) == "a");
    CHECK(g.label(2) == "c");
  }
  SUBCASE("duplicates and loops collapse") {
    Graph g = from_edge_list("a b\na b\na a");
    CHECK(g.node_count() == 2);
    CHECK(g.edge_count() == 1);
  }
  SUBCASE("weight columns ignored, comments skipped") {
    Graph g = from_edge_list("% konect header\n# more\n1 2 1\n\n2 3 1\n");
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g == fixtures::path(3));
  }
  SUBCASE("malformed line reports its number") {
    try {
      (void)from_edge_list("a b\nc\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("empty input") {
    CHECK_THROWS_AS((void)from_edge_list(""), ParseError);
    CHECK_THROWS_AS((void)from_edge_list("% only a comment\n"), ParseError);
  }
  SUBCASE("round trip through text") {
    Graph g = from_edge_list("x y\ny z\nz w\n");
    Graph again = from_edge_list(to_edge_list(g));
    CHECK(again == g);
    CHECK(again.labels() == g.labels());
  }
}

TEST_CASE("toggle_edge") {
  SUBCASE("removal from triangle") {
    Graph g = fixtures::complete(3);
    g.toggle_edge(0, 1);
    CHECK(g.edge_count() == 2);
    CHECK(g == Graph::from_edges(3, std::vector<Edge>{{0, 2}, {1, 2}}));
  }
  SUBCASE("involution") {
    Graph g = fixtures::cycle(5);
    const Graph before = g;
    g.toggle_edge(1, 3);
    g.toggle_edge(1, 3);
    CHECK(g == before);
    CHECK(g.degrees() == before.degrees());
  }
  SUBCASE("addition on empty pair") {
    Graph g(2);
    g.toggle_edge(0, 1);
    CHECK(g.edge_count() == 1);
    CHECK(g.degrees() == std::vector<std::int64_t>{1, 1});
  }
  SUBCASE("errors") {
    Graph g(3);
    CHECK_THROWS_AS(g.toggle_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.toggle_edge(0, 3), std::out_of_range);
    CHECK_THROWS_AS(g.toggle_edge(-1, 0), std::out_of_range);
  }
}

TEST_CASE("degrees stay consistent under random toggles (dense and sparse storage)") {
  std::mt19937_64 rng(7);
  for (std::size_t n : {std::size_t{12}, Graph::kDenseLimit + 5}) {
    Graph g = erdos_renyi(n, 0.01, 3);
    CHECK(g.is_dense() == (n <= Graph::kDenseLimit));
    std::uniform_int_distribution<Node> pick(0, static_cast<Node>(n - 1));
    for (int i = 0; i < 2000; ++i) {
      Node u = pick(rng), w = pick(rng);
      if (u == w) continue;
      const bool before = g.has_edge(u, w);
      g.toggle_edge(u, w);
      REQUIRE(g.has_edge(u, w) != before);
      REQUIRE(g.has_edge(w, u) != before);
    }
    CHECK(g.degrees() == recount_degrees(g));
    std::size_t m = 0;
    for (std::size_t u = 0; u < n; ++u) {
      CHECK_FALSE(g.has_edge(static_cast<Node>(u), static_cast<Node>(u)));
      m += g.neighbours(static_cast<Node>(u)).size();
    }
    CHECK(m == 2 * g.edge_count());
  }
}

TEST_CASE("erdos_renyi") {
  CHECK(erdos_renyi(5, 0.0, 1).edge_count() == 0);
  CHECK(erdos_renyi(5, 1.0, 1).edge_count() == 10);
  CHECK(erdos_renyi(30, 0.4, 9) == erdos_renyi(30, 0.4, 9));
  CHECK_THROWS_AS((void)erdos_renyi(5, 1.5, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)erdos_renyi(5, -0.1, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)erdos_renyi(0, 0.5, 1), std::invalid_argument);

  // Mean edge count of G(20, 0.3) is 0.3 * 190 = 57 with variance 190 * 0.3 * 0.7 per draw.
  const int draws = 1000;
  double total = 0.0;
  for (int i = 0; i < draws; ++i) {
    Graph g = erdos_renyi(20, 0.3, static_cast<std::uint64_t>(1000 + i));
    total += static_cast<double>(g.edge_count());
    for (auto [u, w] : g.edges()) REQUIRE(u < w);
  }
  const double standard_error = std::sqrt(190 * 0.3 * 0.7 / draws);
  CHECK(std::abs(total / draws - 57.0) < 3 * standard_error);
}

TEST_CASE("adjacency_column") {
  CHECK(fixtures::complete(3).adjacency_column(0) == std::vector<std::int64_t>{0, 1, 1});
  CHECK(fixtures::star(3).adjacency_column(0) == std::vector<std::int64_t>{0, 1, 1, 1});
  CHECK(Graph(4).adjacency_column(2) == std::vector<std::int64_t>(4, 0));
  CHECK_THROWS_AS((void)Graph(4).adjacency_column(4), std::out_of_range);
}

TEST_CASE("largest_component") {
  SUBCASE("tie goes to the component holding node 0") {
    Graph g = Graph::from_edges(6, std::vector<Edge>{{3, 4}, {4, 5}, {5, 3}, {0, 1}, {1, 2}, {2, 0}});
    Subgraph lc = largest_component(g);
    CHECK(lc.graph == fixtures::complete(3));
    CHECK(lc.original_ids == std::vector<Node>{0, 1, 2});
  }
  SUBCASE("connected graph is unchanged") {
    Graph g = fixtures::cycle(7);
    CHECK(largest_component(g).graph == g);
  }
  SUBCASE("isolated node dropped") {
    Graph g = Graph::from_edges(4, std::vector<Edge>{{1, 2}, {2, 3}, {3, 1}});
    Subgraph lc = largest_component(g);
    CHECK(lc.graph.node_count() == 3);
    CHECK(lc.original_ids == std::vector<Node>{1, 2, 3});
  }
  SUBCASE("labels follow the nodes") {
    Graph g = from_edge_list("p q\nr s\ns t\n");
    Subgraph lc = largest_component(g);
    CHECK(lc.graph.labels() == std::vector<std::string>{"r", "s", "t"});
  }
  CHECK_THROWS_AS((void)largest_component(Graph{}), std::invalid_argument);
}
