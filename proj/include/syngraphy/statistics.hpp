#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "syngraphy/graph.hpp"

namespace syngraphy {

using Count = std::int64_t;

/// Positions of the six subgraph counts the generator works with.
enum CountIndex : std::size_t { kEdges = 0, kWedges, kClaws, kCrosses, kTriangles, kSquares };
inline constexpr std::size_t kNumCounts = 6;
inline constexpr std::array<std::string_view, kNumCounts> kCountNames = {"m", "s", "z", "x", "t", "q"};

using CountVector = std::array<Count, kNumCounts>;

/// Statistics of one graph. Ratios that are undefined for the graph (clustering
/// without wedges, assortativity of a regular graph, ...) are left empty.
struct StatVector {
  Count n = 0;
  Count m = 0;
  Count s = 0;  // wedges
  Count z = 0;  // claws
  Count x = 0;  // crosses
  Count t = 0;  // triangles
  Count q = 0;  // squares
  double d = 0.0;
  std::optional<double> c;
  std::optional<double> y;
  std::optional<double> b;
  Count delta = 0;
  std::optional<double> rho;

  CountVector counts() const { return {m, s, z, x, t, q}; }
};

/// Statistic names in report order.
inline constexpr std::array<std::string_view, 13> kStatNames = {
    "n", "m", "s", "z", "x", "t", "q", "d", "c", "y", "b", "delta", "rho"};

Count count_edges(const Graph& g);
Count count_wedges(const Graph& g);
Count count_claws(const Graph& g);
Count count_crosses(const Graph& g);
Count count_triangles(const Graph& g);

/// Number of 4-cycles, each counted once. Accumulates the off-diagonal rows of
/// A^2 (common-neighbour counts c_uw) and sums C(c_uw, 2) over node pairs;
/// every 4-cycle is seen once per diagonal. O(sum of squared degrees).
Count count_squares(const Graph& g);

/// Simple paths with three edges on four distinct nodes, a path and its reverse counted once.
Count count_paths3(const Graph& g);

/// {m, s, z, x, t, q} in one pass.
CountVector subgraph_counts(const Graph& g);

/// 3t/s, empty when there are no wedges.
std::optional<double> clustering_coefficient(const Graph& g);

/// 4q/P3, empty when there are no 3-paths.
std::optional<double> four_clustering(const Graph& g);

/// |lambda_min / lambda_max| of the adjacency matrix, empty for an edgeless graph.
/// Throws NumericalError if the eigensolver does not converge.
std::optional<double> bipartivity(const Graph& g);

/// Longest shortest-path distance within the largest connected component.
/// Throws std::invalid_argument for a graph without nodes.
Count diameter(const Graph& g);

/// Pearson correlation of endpoint degrees over the 2m ordered edge incidences.
/// Empty when m = 0 or the incident degrees have zero variance.
std::optional<double> assortativity(const Graph& g);

StatVector full_stat_vector(const Graph& g);

/// One "name<TAB>value" line per statistic; undefined values print as "undefined".
std::string to_key_value(const StatVector& stats);

/// JSON object keyed by statistic name; undefined values are the string "undefined".
std::string to_json(const StatVector& stats);

enum class Pattern { edge, wedge, claw, cross, triangle, square, path3 };

/// Exhaustive count of (not necessarily induced) copies of `pattern`: every
/// injective placement of the pattern's nodes is tested and the total divided
/// by the pattern's automorphism count. Test oracle only; throws
/// std::invalid_argument when n > 12.
Count brute_force_count(const Graph& g, Pattern pattern);

}  // namespace syngraphy
