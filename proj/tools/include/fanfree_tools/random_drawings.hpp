#pragma once

#include "fanfree/drawing.hpp"

#include <cstdint>
#include <random>

namespace fanfree::tools {

using Rng = std::mt19937_64;

/// uniform integer in [lo, hi], portable across standard libraries
long long uniform(Rng& rng, long long lo, long long hi);

/**
 * @brief Vertices in general position with small rational coordinates.
 *
 * No two coincide and no three are collinear.
 */
std::vector<Point> random_points(Rng& rng, int n, int range);

/// simple straight-line drawing with up to max_edges random edges
StraightLineDrawing random_simple_drawing(Rng& rng, int n, int max_edges, int range = 30);

/// random edges are kept only while the drawing stays k-fan-crossing free
StraightLineDrawing random_fan_free_drawing(Rng& rng, int n, int k, int attempts, int range = 30);

}  // namespace fanfree::tools
