#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "syngraphy/graph.hpp"

namespace syngraphy {

enum class LayoutMethod { fr, la };

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

/// One point per node, inside [0,1]^2 once produced by a layout function.
struct Layout {
  std::vector<Point> coordinates;
  LayoutMethod method = LayoutMethod::fr;
  std::uint64_t seed = 0;
};

struct FrOptions {
  std::size_t iterations = 500;
  double area = 1.0;  // frame is a square of this area
};

/// Fruchterman-Reingold spring embedding: repulsion k^2/dist between all pairs,
/// attraction dist^2/k along edges with k = sqrt(area/n), displacement capped by
/// a temperature that cools linearly to zero. Start positions are uniform in the
/// frame. Coordinates are normalised into [0,1]^2 per axis.
Layout fruchterman_reingold(const Graph& g, std::uint64_t seed, const FrOptions& options = {});

/// Graphs up to this size use a dense eigensolver for the Laplacian embedding.
inline constexpr std::size_t kDenseLaplacianLimit = 1000;

/// Spectral layout from the eigenvectors of the 2nd and 3rd smallest eigenvalues
/// of D - A. Each vector's largest-magnitude entry is made positive. The seed
/// only feeds the iterative solver used above kDenseLaplacianLimit nodes (or
/// always, when force_iterative is set).
/// Throws std::invalid_argument for a disconnected graph or n < 3, and
/// NumericalError if the iterative solver does not converge.
Layout laplacian_embedding(const Graph& g, std::uint64_t seed, bool force_iterative = false);

/// Affine map of each axis onto [0,1]; an axis with zero extent maps to 0.5.
void normalise_unit_square(std::vector<Point>& points);

/// "node<TAB>x<TAB>y" lines, node names from the graph's labels.
std::string format_coordinates(const Graph& g, const Layout& layout);

/// Inverse of format_coordinates for graph g. Throws ParseError on unknown nodes,
/// malformed lines or missing nodes.
Layout parse_coordinates(const Graph& g, std::string_view text);

}  // namespace syngraphy
