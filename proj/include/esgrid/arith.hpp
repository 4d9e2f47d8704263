#pragma once
/**
 * Exact arithmetic kernel.
 *
 * All coordinates are arbitrary-precision integers; no predicate in this
 * header ever rounds. QuadValue represents a + b*sqrt(3) exactly and is only
 * needed by the compact constructions, which size their gaps with irrational
 * factors 2+sqrt(3) and 1+sqrt(3).
 */

#include <compare>
#include <iosfwd>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "esgrid/error.hpp"

namespace esgrid {

using BigInt = boost::multiprecision::cpp_int;

struct Point {
  BigInt x;
  BigInt y;

  friend bool operator==(const Point&, const Point&) = default;
  friend std::strong_ordering operator<=>(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.y != b.y) return a.y < b.y ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
std::ostream& operator<<(std::ostream& os, const Point& p);

enum class Orientation { kRightTurn = -1, kCollinear = 0, kLeftTurn = 1 };
enum class Side { kBelow = -1, kOn = 0, kAbove = 1 };

/// Sign of (q - p) x (r - p). Equal points give kCollinear.
Orientation orientation(const Point& p, const Point& q, const Point& r);

/// Two distinct points, stored left endpoint first.
class Line {
 public:
  /// Canonicalizes the endpoint order; throws kInvalidArgument when a == b.
  Line(Point a, Point b);

  const Point& p() const { return p_; }
  const Point& q() const { return q_; }
  bool is_vertical() const { return p_.x == q_.x; }

  BigInt dx() const { return q_.x - p_.x; }
  BigInt dy() const { return q_.y - p_.y; }

  /// The same line shifted by `offset`.
  Line translated(const Point& offset) const;

  friend bool operator==(const Line&, const Line&) = default;

 private:
  Point p_;
  Point q_;
};

/// Compares slopes by cross-multiplication. Throws kVerticalLine.
std::strong_ordering slope_compare(const Line& l1, const Line& l2);

/// Position of p relative to the infinite line through l. Throws kVerticalLine.
Side point_side(const Point& p, const Line& l);

/// The exact value a + b*sqrt(3).
struct QuadValue {
  BigInt a;
  BigInt b;

  friend bool operator==(const QuadValue&, const QuadValue&) = default;
};

QuadValue operator+(const QuadValue& u, const QuadValue& v);
QuadValue operator-(const QuadValue& u, const QuadValue& v);
QuadValue operator*(const QuadValue& u, const QuadValue& v);

/// Sign of a + b*sqrt(3): -1, 0 or +1.
int quad_sign(const QuadValue& u);

std::strong_ordering quad_compare(const QuadValue& u, const QuadValue& v);

/// Smallest integer >= a + b*sqrt(3).
BigInt quad_ceil(const QuadValue& u);

/// Smallest integer >= num / den for den > 0.
BigInt ceil_div(const BigInt& num, const BigInt& den);

/// Largest integer <= num / den for den > 0.
BigInt floor_div(const BigInt& num, const BigInt& den);

struct GridBounds {
  BigInt width;
  BigInt height;

  friend bool operator==(const GridBounds&, const GridBounds&) = default;
};

BigInt parse_bigint(const std::string& text);

}  // namespace esgrid
