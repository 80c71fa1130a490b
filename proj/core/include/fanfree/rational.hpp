#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace fanfree {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/** @brief Exact rational point in the plane. */
struct Point {
  Rational x;
  Rational y;

  Point() = default;
  Point(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {}
  Point(long long x_, long long y_) : x(x_), y(y_) {}

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
};

inline Rational make_rational(long long num, long long den) { return Rational(BigInt(num), BigInt(den)); }

double to_double(const Rational& r);
std::string to_string(const Rational& r);

}  // namespace fanfree
