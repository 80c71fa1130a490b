#pragma once

#include "fanfree/rational.hpp"

#include <span>
#include <vector>

namespace fanfree {

/** @brief Integer point obtained after clearing the denominators of a point set. */
struct IntPoint {
  BigInt x;
  BigInt y;

  friend bool operator==(const IntPoint& a, const IntPoint& b) { return a.x == b.x && a.y == b.y; }
};

/// multiplies every coordinate by the lcm of all denominators
std::vector<IntPoint> to_integer_points(std::span<const Point> pts);

/// sign of cross(b - a, c - a): +1 left turn, -1 right turn, 0 collinear
int orientation(const IntPoint& a, const IntPoint& b, const IntPoint& c);
int orientation(const Point& a, const Point& b, const Point& c);

/// p lies on the closed segment ab (ab non-degenerate)
bool on_closed_segment(const IntPoint& p, const IntPoint& a, const IntPoint& b);
/// p lies strictly between a and b on segment ab
bool on_open_segment(const IntPoint& p, const IntPoint& a, const IntPoint& b);

enum class SegmentContact {
  disjoint,
  proper_crossing,   // single point interior to both
  touching,          // an endpoint lies on the other segment, not collinear
  collinear_overlap  // collinear with more than a point in common, or touching collinearly
};

/// contact type for segments ab and cd that share no endpoint
SegmentContact classify_contact(const IntPoint& a, const IntPoint& b, const IntPoint& c, const IntPoint& d);

/// segments pa and pb share endpoint p; true when they overlap beyond p
bool adjacent_overlap(const IntPoint& p, const IntPoint& a, const IntPoint& b);

/// compares the directions d1, d2 by counterclockwise angle from the positive x-axis; -1, 0, +1
int compare_direction(const IntPoint& d1, const IntPoint& d2);

/// twice the signed area of a closed polygon
BigInt twice_signed_area(std::span<const IntPoint> poly);

/**
 * @brief Point-in-polygon by exact half-open ray casting.
 *
 * The polygon may repeat vertices (boundary walks do). p must not lie on the boundary.
 */
bool inside_polygon(const IntPoint& p, std::span<const IntPoint> poly);

/// every consecutive triple turns left (counterclockwise, no collinear triples)
bool strictly_convex_ccw(std::span<const IntPoint> poly);
bool strictly_convex_ccw(std::span<const Point> poly);

}  // namespace fanfree
