#pragma once

#include "fanfree/drawing.hpp"

#include <string>

namespace fanfree {

struct SvgOptions {
  double width = 800.0;
  double margin = 24.0;
  double vertex_radius = 4.0;
  bool mark_crossings = true;
};

/**
 * @brief SVG 1.1 document: one circle per vertex, one path per edge, crossings marked with squares.
 *
 * Floating point is used for display only.
 */
std::string render_svg(const StraightLineDrawing& d, const CrossingRelation& c, const SvgOptions& options = {});

}  // namespace fanfree
