#include "syngraphy/render.hpp"

#include <cstdio>
#include <stdexcept>

namespace syngraphy {
namespace {

constexpr double kCanvas = 1000.0;
constexpr double kMargin = 0.05 * kCanvas;

double to_canvas(double unit) { return kMargin + unit * (kCanvas - 2.0 * kMargin); }

std::string escape_attribute(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const Graph& g, const Layout& layout, const RenderOptions& options) {
  if (layout.coordinates.size() != g.node_count())
    throw std::invalid_argument("layout has " + std::to_string(layout.coordinates.size()) +
                                " points for a graph with " + std::to_string(g.node_count()) + " nodes");
  std::string out;
  char buf[256];
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 1000 1000\" width=\"1000\" height=\"1000\">\n";
  std::snprintf(buf, sizeof buf, "<g stroke=\"%s\" stroke-width=\"%.3f\">\n",
                escape_attribute(options.edge_stroke).c_str(), options.edge_width);
  out += buf;
  for (auto [u, w] : g.edges()) {
    const Point& a = layout.coordinates[static_cast<std::size_t>(u)];
    const Point& b = layout.coordinates[static_cast<std::size_t>(w)];
    std::snprintf(buf, sizeof buf, "<line x1=\"%.3f\" y1=\"%.3f\" x2=\"%.3f\" y2=\"%.3f\"/>\n", to_canvas(a.x),
                  to_canvas(a.y), to_canvas(b.x), to_canvas(b.y));
    out += buf;
  }
  out += "</g>\n";
  std::snprintf(buf, sizeof buf, "<g fill=\"%s\">\n", escape_attribute(options.node_fill).c_str());
  out += buf;
  for (std::size_t u = 0; u < g.node_count(); ++u) {
    const Point& p = layout.coordinates[u];
    std::snprintf(buf, sizeof buf, "<circle cx=\"%.3f\" cy=\"%.3f\" r=\"%.3f\"><title>", to_canvas(p.x),
                  to_canvas(p.y), options.node_radius);
    out += buf;
    out += escape_attribute(g.label(static_cast<Node>(u)));
    out += "</title></circle>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace syngraphy
