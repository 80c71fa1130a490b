#include "fanfree/geometry.hpp"

#include <boost/multiprecision/integer.hpp>

namespace fanfree {

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

std::vector<IntPoint> to_integer_points(std::span<const Point> pts) {
  BigInt scale = 1;
  for (const auto& p : pts) {
    scale = boost::multiprecision::lcm(scale, BigInt(boost::multiprecision::denominator(p.x)));
    scale = boost::multiprecision::lcm(scale, BigInt(boost::multiprecision::denominator(p.y)));
  }
  std::vector<IntPoint> out;
  out.reserve(pts.size());
  for (const auto& p : pts) {
    BigInt x = boost::multiprecision::numerator(p.x) * (scale / boost::multiprecision::denominator(p.x));
    BigInt y = boost::multiprecision::numerator(p.y) * (scale / boost::multiprecision::denominator(p.y));
    out.push_back({std::move(x), std::move(y)});
  }
  return out;
}

namespace {

int sign(const BigInt& v) { return v.sign(); }

BigInt cross(const IntPoint& a, const IntPoint& b, const IntPoint& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

bool within(const BigInt& v, const BigInt& a, const BigInt& b) {
  return a <= b ? (a <= v && v <= b) : (b <= v && v <= a);
}

bool strictly_within(const BigInt& v, const BigInt& a, const BigInt& b) {
  return a <= b ? (a < v && v < b) : (b < v && v < a);
}

}  // namespace

int orientation(const IntPoint& a, const IntPoint& b, const IntPoint& c) { return sign(cross(a, b, c)); }

int orientation(const Point& a, const Point& b, const Point& c) {
  Rational v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return v.sign();
}

bool on_closed_segment(const IntPoint& p, const IntPoint& a, const IntPoint& b) {
  return orientation(a, b, p) == 0 && within(p.x, a.x, b.x) && within(p.y, a.y, b.y);
}

bool on_open_segment(const IntPoint& p, const IntPoint& a, const IntPoint& b) {
  if (orientation(a, b, p) != 0) return false;
  if (a.x != b.x) return strictly_within(p.x, a.x, b.x);
  return strictly_within(p.y, a.y, b.y);
}

SegmentContact classify_contact(const IntPoint& a, const IntPoint& b, const IntPoint& c, const IntPoint& d) {
  // bounding boxes first
  auto lo = [](const BigInt& x, const BigInt& y) -> const BigInt& { return x < y ? x : y; };
  auto hi = [](const BigInt& x, const BigInt& y) -> const BigInt& { return x < y ? y : x; };
  if (hi(a.x, b.x) < lo(c.x, d.x) || hi(c.x, d.x) < lo(a.x, b.x) || hi(a.y, b.y) < lo(c.y, d.y) ||
      hi(c.y, d.y) < lo(a.y, b.y)) {
    return SegmentContact::disjoint;
  }
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);
  if (o1 == 0 && o2 == 0) {
    const bool overlap = on_closed_segment(c, a, b) || on_closed_segment(d, a, b) || on_closed_segment(a, c, d) ||
                         on_closed_segment(b, c, d);
    return overlap ? SegmentContact::collinear_overlap : SegmentContact::disjoint;
  }
  if (o1 * o2 < 0 && o3 * o4 < 0) return SegmentContact::proper_crossing;
  if ((o1 == 0 && on_closed_segment(c, a, b)) || (o2 == 0 && on_closed_segment(d, a, b)) ||
      (o3 == 0 && on_closed_segment(a, c, d)) || (o4 == 0 && on_closed_segment(b, c, d))) {
    return SegmentContact::touching;
  }
  return SegmentContact::disjoint;
}

bool adjacent_overlap(const IntPoint& p, const IntPoint& a, const IntPoint& b) {
  if (orientation(p, a, b) != 0) return false;
  const BigInt dot = (a.x - p.x) * (b.x - p.x) + (a.y - p.y) * (b.y - p.y);
  return dot.sign() > 0;
}

namespace {

int half_plane(const IntPoint& d) {
  if (d.y.sign() > 0 || (d.y.sign() == 0 && d.x.sign() > 0)) return 0;
  return 1;
}

}  // namespace

int compare_direction(const IntPoint& d1, const IntPoint& d2) {
  const int h1 = half_plane(d1);
  const int h2 = half_plane(d2);
  if (h1 != h2) return h1 < h2 ? -1 : 1;
  const BigInt c = d1.x * d2.y - d1.y * d2.x;
  if (c.sign() > 0) return -1;
  if (c.sign() < 0) return 1;
  return 0;
}

BigInt twice_signed_area(std::span<const IntPoint> poly) {
  BigInt sum = 0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = poly[i];
    const auto& q = poly[(i + 1) % n];
    sum += p.x * q.y - p.y * q.x;
  }
  return sum;
}

bool inside_polygon(const IntPoint& p, std::span<const IntPoint> poly) {
  bool inside = false;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = poly[i];
    const auto& b = poly[(i + 1) % n];
    const bool a_above = a.y > p.y;
    const bool b_above = b.y > p.y;
    if (a_above == b_above) continue;
    const int o = orientation(a, b, p);
    const bool right_of_p = b_above ? o > 0 : o < 0;
    if (right_of_p) inside = !inside;
  }
  return inside;
}

bool strictly_convex_ccw(std::span<const IntPoint> poly) {
  const std::size_t n = poly.size();
  if (n < 3) return false;
  std::size_t wraps = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = poly[i];
    const auto& b = poly[(i + 1) % n];
    const auto& c = poly[(i + 2) % n];
    if (orientation(a, b, c) <= 0) return false;
    const IntPoint d1{b.x - a.x, b.y - a.y};
    const IntPoint d2{c.x - b.x, c.y - b.y};
    if (compare_direction(d2, d1) < 0) ++wraps;
  }
  return wraps == 1;
}

bool strictly_convex_ccw(std::span<const Point> poly) {
  const auto pts = to_integer_points(poly);
  return strictly_convex_ccw(std::span<const IntPoint>(pts));
}

}  // namespace fanfree
