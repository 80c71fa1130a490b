#include "fanfree/svg.hpp"

#include "fanfree/error.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace fanfree {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const StraightLineDrawing& d, const CrossingRelation& c, const SvgOptions& options) {
  const auto& g = d.graph;
  if (d.coords.size() != g.vertex_count()) throw Error("drawing lacks coordinates for every vertex");
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& p : d.coords) {
    xs.push_back(to_double(p.x));
    ys.push_back(to_double(p.y));
  }
  double min_x = 0, max_x = 1, min_y = 0, max_y = 1;
  if (!xs.empty()) {
    min_x = *std::min_element(xs.begin(), xs.end());
    max_x = *std::max_element(xs.begin(), xs.end());
    min_y = *std::min_element(ys.begin(), ys.end());
    max_y = *std::max_element(ys.begin(), ys.end());
  }
  const double span_x = std::max(max_x - min_x, 1e-9);
  const double span_y = std::max(max_y - min_y, 1e-9);
  const double inner = options.width - 2 * options.margin;
  const double scale = inner / std::max(span_x, span_y);
  const double height = span_y * scale + 2 * options.margin;
  auto sx = [&](double x) { return options.margin + (x - min_x) * scale; };
  auto sy = [&](double y) { return options.margin + (max_y - y) * scale; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(options.width)
      << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(options.width) << ' ' << num(height) << "\">\n";
  out << "  <title>" << escape(d.provenance) << "</title>\n";
  out << "  <g class=\"edges\" stroke=\"#333\" stroke-width=\"1\" fill=\"none\">\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    out << "    <path id=\"e" << e << "\" d=\"M " << num(sx(xs[ed.u])) << ' ' << num(sy(ys[ed.u])) << " L "
        << num(sx(xs[ed.v])) << ' ' << num(sy(ys[ed.v])) << "\"/>\n";
  }
  out << "  </g>\n";
  if (options.mark_crossings) {
    out << "  <g class=\"crossings\" fill=\"#c0392b\">\n";
    const double half = options.vertex_radius * 0.6;
    for (const auto& [a, b] : c.pairs()) {
      const auto& e = g.edge(a);
      const auto& f = g.edge(b);
      const double x1 = xs[e.u], y1 = ys[e.u], x2 = xs[e.v], y2 = ys[e.v];
      const double x3 = xs[f.u], y3 = ys[f.u], x4 = xs[f.v], y4 = ys[f.v];
      const double den = (x2 - x1) * (y4 - y3) - (y2 - y1) * (x4 - x3);
      if (den == 0) continue;
      const double t = ((x3 - x1) * (y4 - y3) - (y3 - y1) * (x4 - x3)) / den;
      const double px = x1 + t * (x2 - x1);
      const double py = y1 + t * (y2 - y1);
      out << "    <rect x=\"" << num(sx(px) - half) << "\" y=\"" << num(sy(py) - half) << "\" width=\""
          << num(2 * half) << "\" height=\"" << num(2 * half) << "\"/>\n";
    }
    out << "  </g>\n";
  }
  out << "  <g class=\"vertices\" fill=\"#1f4e79\">\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "    <circle id=\"v" << v << "\" cx=\"" << num(sx(xs[v])) << "\" cy=\"" << num(sy(ys[v])) << "\" r=\""
        << num(options.vertex_radius) << "\"/>\n";
  }
  out << "  </g>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace fanfree
