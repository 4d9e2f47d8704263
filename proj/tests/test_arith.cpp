#include "doctest.h"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <random>

#include "esgrid/arith.hpp"
#include "esgrid/constructions.hpp"

using namespace esgrid;
using Float = boost::multiprecision::cpp_bin_float_100;

namespace {

Float approx(const QuadValue& u) {
  return Float(u.a) + Float(u.b) * boost::multiprecision::sqrt(Float(3));
}

}  // namespace

TEST_CASE("orientation of simple triples") {
  CHECK(orientation({0, 0}, {1, 0}, {2, 0}) == Orientation::kCollinear);
  CHECK(orientation({0, 0}, {1, 0}, {2, 1}) == Orientation::kLeftTurn);
  CHECK(orientation({0, 0}, {1, 0}, {2, -1}) == Orientation::kRightTurn);
}

TEST_CASE("orientation is exact far beyond 64 bits") {
  const BigInt big = BigInt(1) << 200;
  CHECK(orientation({0, 0}, {big, big}, {2 * big, 2 * big}) == Orientation::kCollinear);
  CHECK(orientation({0, 0}, {big, big}, {2 * big, 2 * big + 1}) == Orientation::kLeftTurn);
}

TEST_CASE("Line keeps the left endpoint first") {
  const Line l(Point{3, 4}, Point{1, 0});
  CHECK(l.p() == Point{1, 0});
  CHECK(l.q() == Point{3, 4});
  CHECK_THROWS_AS(Line(Point{1, 1}, Point{1, 1}), Error);
}

TEST_CASE("slope_compare") {
  CHECK(slope_compare(Line({0, 0}, {1, 1}), Line({0, 0}, {1, 2})) == std::strong_ordering::less);
  CHECK(slope_compare(Line({0, 0}, {1, 1}), Line({5, 5}, {7, 7})) == std::strong_ordering::equal);
  CHECK(slope_compare(Line({0, 0}, {1, -1}), Line({0, 0}, {1, -3})) == std::strong_ordering::greater);
  try {
    slope_compare(Line({0, 0}, {0, 1}), Line({0, 0}, {1, 1}));
    FAIL("expected VerticalLine");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kVerticalLine);
  }

  // Lines through the two halves of P_2 and P_3.
  const PointSet p2 = build_pr(2), p3 = build_pr(3);
  const Line l2(p2[1], p2[2]), l3(p3[3], p3[4]);
  CHECK(slope_compare(l2, l3) == std::strong_ordering::less);
}

TEST_CASE("point_side") {
  const Line axis({-1, 0}, {1, 0});
  CHECK(point_side({0, 1}, axis) == Side::kAbove);
  CHECK(point_side({5, 0}, axis) == Side::kOn);
  CHECK(point_side({0, -1}, axis) == Side::kBelow);

  const PointSet p3 = build_pr(3);
  CHECK(p3[7] == Point{63, 192});
  CHECK(point_side(p3[7], Line(p3[1], p3[2])) == Side::kAbove);
}

TEST_CASE("quad_compare examples") {
  CHECK(quad_compare({0, 1}, {2, 0}) == std::strong_ordering::less);
  CHECK(quad_compare({1, 1}, {0, 2}) == std::strong_ordering::less);
  CHECK(quad_compare({7, -3}, {7, -3}) == std::strong_ordering::equal);
  CHECK(quad_sign({0, 0}) == 0);
}

TEST_CASE("quad_compare agrees with 100-digit floating point") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> small(-1000, 1000);
  std::uniform_int_distribution<long long> large(-(1LL << 40), 1LL << 40);
  for (int i = 0; i < 10000; ++i) {
    auto& dist = (i % 2) ? small : large;
    const QuadValue u{dist(rng), dist(rng)};
    const QuadValue v{dist(rng), dist(rng)};
    const Float fu = approx(u), fv = approx(v);
    const auto expected = fu < fv   ? std::strong_ordering::less
                          : fu > fv ? std::strong_ordering::greater
                                    : std::strong_ordering::equal;
    REQUIRE(quad_compare(u, v) == expected);
  }
}

TEST_CASE("quad_ceil") {
  CHECK(quad_ceil({0, 1}) == 2);
  CHECK(quad_ceil({26, 15}) == 52);
  CHECK(quad_ceil({5, 0}) == 5);
  CHECK(quad_ceil({0, -1}) == -1);
  CHECK(quad_ceil({3, -1}) == 2);

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> dist(-(1LL << 30), 1LL << 30);
  for (int i = 0; i < 10000; ++i) {
    const QuadValue u{dist(rng), dist(rng)};
    const BigInt c = quad_ceil(u);
    const Float f = approx(u);
    REQUIRE(Float(c) >= f);
    REQUIRE(Float(c - 1) < f);
  }
}

TEST_CASE("optimized extents follow the Lucas recurrence") {
  // L_r = (2+sqrt3)^r + (2-sqrt3)^r is an integer and 0 < (2-sqrt3)^r < 1.
  const auto x = optimized_x_extents(40);
  REQUIRE(x.size() == 41);
  CHECK(x[0] == 1);
  BigInt prev = 2, cur = 4;
  for (int r = 1; r <= 40; ++r) {
    CHECK(x[r] == cur);
    const BigInt next = 4 * cur - prev;
    prev = cur;
    cur = next;
  }
  CHECK(x[3] == 52);
}

TEST_CASE("floor_div and ceil_div") {
  CHECK(floor_div(7, 2) == 3);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(-8, 2) == -4);
  CHECK(ceil_div(7, 2) == 4);
  CHECK(ceil_div(-7, 2) == -3);
  CHECK(ceil_div(8, 2) == 4);
}

TEST_CASE("parse_bigint") {
  const std::string digits(100, '9');
  CHECK(parse_bigint(digits) == BigInt(digits));
  CHECK(parse_bigint("-" + digits) == -BigInt(digits));
  CHECK(parse_bigint("+12") == 12);
  for (const char* bad : {"", "-", "1.5", "12a", " 1", "0x10"}) {
    CHECK_THROWS_AS(parse_bigint(bad), Error);
  }
}
