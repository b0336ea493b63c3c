#pragma once

#include <string>

#include "syngraphy/graph.hpp"
#include "syngraphy/layout.hpp"

namespace syngraphy {

struct RenderOptions {
  double node_radius = 6.0;
  double edge_width = 1.0;
  std::string node_fill = "#1f5f99";
  std::string edge_stroke = "#8c8c8c";
};

/// SVG 1.1 drawing in a 1000x1000 viewBox with a 5% margin: one <line> per
/// edge (drawn first), then one <circle> per node. Throws std::invalid_argument
/// if the layout does not have exactly one point per node.
std::string render_svg(const Graph& g, const Layout& layout, const RenderOptions& options = {});

}  // namespace syngraphy
