#include "esgrid/arith.hpp"

#include <ostream>
#include <utility>

namespace esgrid {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kVerticalLine: return "VerticalLine";
    case ErrorCode::kEmptySet: return "EmptySet";
    case ErrorCode::kDuplicatePoint: return "DuplicatePoint";
    case ErrorCode::kDuplicateX: return "DuplicateX";
    case ErrorCode::kNotGeneralPosition: return "NotGeneralPosition";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kConstructionFailed: return "ConstructionFailed";
  }
  return "Unknown";
}

Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }

std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << '(' << p.x << ", " << p.y << ')';
}

Orientation orientation(const Point& p, const Point& q, const Point& r) {
  const BigInt cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  if (cross > 0) return Orientation::kLeftTurn;
  if (cross < 0) return Orientation::kRightTurn;
  return Orientation::kCollinear;
}

Line::Line(Point a, Point b) {
  if (a == b) throw Error(ErrorCode::kInvalidArgument, "line endpoints coincide");
  if (b < a) std::swap(a, b);
  p_ = std::move(a);
  q_ = std::move(b);
}

Line Line::translated(const Point& offset) const { return Line(p_ + offset, q_ + offset); }

namespace {

void require_not_vertical(const Line& l) {
  if (l.is_vertical()) throw Error(ErrorCode::kVerticalLine, "slope of a vertical line");
}

std::strong_ordering compare_sign(const BigInt& v) {
  if (v < 0) return std::strong_ordering::less;
  if (v > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering slope_compare(const Line& l1, const Line& l2) {
  require_not_vertical(l1);
  require_not_vertical(l2);
  // Both dx are positive after canonicalization, so cross-multiplying keeps the order.
  return compare_sign(l1.dy() * l2.dx() - l2.dy() * l1.dx());
}

Side point_side(const Point& p, const Line& l) {
  require_not_vertical(l);
  switch (orientation(l.p(), l.q(), p)) {
    case Orientation::kLeftTurn: return Side::kAbove;
    case Orientation::kRightTurn: return Side::kBelow;
    case Orientation::kCollinear: break;
  }
  return Side::kOn;
}

QuadValue operator+(const QuadValue& u, const QuadValue& v) { return {u.a + v.a, u.b + v.b}; }
QuadValue operator-(const QuadValue& u, const QuadValue& v) { return {u.a - v.a, u.b - v.b}; }
QuadValue operator*(const QuadValue& u, const QuadValue& v) {
  return {u.a * v.a + 3 * u.b * v.b, u.a * v.b + u.b * v.a};
}

int quad_sign(const QuadValue& u) {
  const int sa = u.a.sign();
  const int sb = u.b.sign();
  if (sa >= 0 && sb >= 0) return (sa > 0 || sb > 0) ? 1 : 0;
  if (sa <= 0 && sb <= 0) return -1;
  // Opposite signs: the term with the larger square wins.
  const BigInt lhs = u.a * u.a;
  const BigInt rhs = 3 * u.b * u.b;
  const int dominant = lhs > rhs ? sa : sb;
  return dominant;
}

std::strong_ordering quad_compare(const QuadValue& u, const QuadValue& v) {
  const int s = quad_sign(u - v);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

BigInt quad_ceil(const QuadValue& u) {
  if (u.b == 0) return u.a;
  // For b != 0, b*sqrt(3) is irrational and lies strictly between
  // consecutive integers around +-isqrt(3 b^2).
  const BigInt s = boost::multiprecision::sqrt(BigInt(3 * u.b * u.b));
  if (u.b > 0) return u.a + s + 1;
  return u.a - s;
}

BigInt floor_div(const BigInt& num, const BigInt& den) {
  BigInt q = num / den;
  if (num % den != 0 && num < 0) q -= 1;
  return q;
}

BigInt ceil_div(const BigInt& num, const BigInt& den) {
  BigInt q = num / den;
  if (num % den != 0 && num > 0) q += 1;
  return q;
}

BigInt parse_bigint(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw Error(ErrorCode::kParseError, "empty integer '" + text + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') {
      throw Error(ErrorCode::kParseError, "invalid integer '" + text + "'");
    }
  }
  BigInt v(text.substr(i));
  return text[0] == '-' ? BigInt(-v) : v;
}

}  // namespace esgrid
