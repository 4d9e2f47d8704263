#include "doctest.h"

#include <random>

#include "esgrid/constructions.hpp"
#include "esgrid/verification.hpp"
#include "oracles.hpp"

using namespace esgrid;

namespace {

PointSet pts(std::initializer_list<std::pair<long long, long long>> list) {
  std::vector<Point> v;
  for (auto [x, y] : list) v.push_back({x, y});
  return PointSet(std::move(v));
}

PointSet transform(const PointSet& s, long long a, long long b, long long c, long long d, long long tx,
                   long long ty) {
  std::vector<Point> v;
  for (const auto& p : s.points()) v.push_back({a * p.x + b * p.y + tx, c * p.x + d * p.y + ty});
  return PointSet(std::move(v));
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST_CASE("general position") {
  const auto r = check_general_position(pts({{0, 0}, {1, 1}, {2, 2}}));
  CHECK_FALSE(r.ok);
  REQUIRE(r.witness);
  CHECK(*r.witness == std::array<std::size_t, 3>{0, 1, 2});
  CHECK(check_general_position(build_pr(3)).ok);
  CHECK(check_general_position(build_es_baseline(6)).ok);
  CHECK(check_general_position(pts({{0, 0}})).ok);
}

TEST_CASE("cups and caps") {
  CHECK(max_cup(pts({{0, 0}, {1, 0}})).size == 2);
  CHECK(max_cup(pts({{0, 1}, {1, 0}, {2, 1}})).size == 3);
  CHECK(max_cap(pts({{0, 0}, {1, 1}})).size == 2);
  CHECK(max_cap(pts({{0, 0}, {1, 1}, {2, 0}})).size == 3);
  CHECK(max_cup(pts({{0, 0}, {1, 1}, {2, 0}})).size == 2);
  CHECK(code_of([] { max_cup(pts({{0, 0}, {0, 1}})); }) == ErrorCode::kDuplicateX);

  const PointSet s55 = build_skl_baseline(5, 5);
  CHECK(s55.size() == 20);
  const auto cup = max_cup(s55), cap = max_cap(s55);
  CHECK(cup.size == 4);
  CHECK(cap.size == 4);
  CHECK(is_cup(s55, cup.witness));
  CHECK(is_cap(s55, cap.witness));
}

TEST_CASE("largest convex subset") {
  CHECK(max_convex_subset(pts({{0, 0}, {5, 1}, {2, 7}})).size == 3);
  CHECK(max_convex_subset(pts({{0, 0}})).size == 1);
  CHECK(max_convex_subset(build_es_baseline(4)).size == 3);
  CHECK(max_convex_subset(build_es_baseline(6)).size == 5);
  // Six points on a parabola are in convex position.
  CHECK(max_convex_subset(pts({{0, 0}, {1, 1}, {2, 4}, {3, 9}, {4, 16}, {5, 25}})).size == 6);
  CHECK(code_of([] { max_convex_subset(pts({{0, 0}, {1, 1}, {2, 2}, {0, 5}})); }) ==
        ErrorCode::kNotGeneralPosition);
}

TEST_CASE("largest empty convex subset") {
  CHECK(max_empty_convex_subset(pts({{0, 0}, {5, 1}, {2, 7}})).size == 3);
  CHECK(max_empty_convex_subset(pts({{0, 0}, {4, 0}, {4, 4}, {0, 5}})).size == 4);
  const PointSet sq = pts({{0, 0}, {4, 0}, {0, 4}, {4, 4}, {2, 1}});
  const auto e = max_empty_convex_subset(sq);
  CHECK(e.size == 4);
  CHECK(is_empty_polygon(sq, e.witness));
  CHECK(max_convex_subset(sq).size == 4);
}

TEST_CASE("witnesses certify their values") {
  for (const PointSet& s : {build_es_baseline(5), build_es_optimized(6), build_skl_optimized(5, 4)}) {
    const auto c = max_convex_subset(s);
    CHECK(static_cast<int>(c.witness.size()) == c.size);
    CHECK(is_convex_polygon(s, c.witness));
    const auto e = max_empty_convex_subset(s);
    CHECK(e.size <= c.size);
    CHECK(is_empty_polygon(s, e.witness));
    CHECK(is_convex_polygon(s, e.witness));
  }
}

TEST_CASE("witness checkers reject bad input") {
  const PointSet sq = pts({{0, 0}, {4, 0}, {0, 4}, {4, 4}, {2, 1}});
  CHECK(is_convex_polygon(sq, {0, 1, 3, 2}));
  CHECK_FALSE(is_convex_polygon(sq, {0, 3, 1, 2}));    // self-intersecting order
  CHECK_FALSE(is_convex_polygon(sq, {0, 1, 4, 3, 2}));  // (2,1) is inside
  CHECK_FALSE(is_empty_polygon(sq, {0, 1, 3, 2}));
  CHECK_FALSE(is_cup(sq, {0, 9}));
  CHECK_FALSE(is_cap(sq, {1, 0}));
}

TEST_CASE("convex hull") {
  const PointSet sq = pts({{0, 0}, {4, 0}, {0, 4}, {4, 4}, {2, 1}, {2, 0}});
  CHECK(convex_hull(sq) == std::vector<std::size_t>{0, 1, 3, 2});
}

TEST_CASE("high above") {
  CHECK(is_high_above(pts({{0, 10}, {1, 10}}), pts({{0, 0}, {1, 0}})).ok);
  // y = x passes below (0, 1); a single upper point spans no line.
  CHECK(is_high_above(pts({{0, 1}}), pts({{0, 0}, {2, 2}})).ok);
  const auto r = is_high_above(pts({{1, 0}}), pts({{0, 0}, {2, 2}}));
  CHECK_FALSE(r.ok);
  REQUIRE(r.witness);
  CHECK_FALSE(r.witness->line_from_upper);
  CHECK(r.witness->point == Point{1, 0});
  const auto u = is_high_above(pts({{0, 5}, {4, 9}}), pts({{1, 8}}));
  CHECK_FALSE(u.ok);
  REQUIRE(u.witness);
  CHECK(u.witness->line_from_upper);
  CHECK_FALSE(is_high_above(pts({{0, 5}, {0, 9}}), pts({{1, 0}})).ok);
  const PointSet p5 = build_pr(5);
  const std::vector<Point> all(p5.points().begin(), p5.points().end());
  const std::span<const Point> left(all.data(), 16), right(all.data() + 16, 16);
  CHECK(is_high_above(right, left).ok);
  CHECK_FALSE(is_high_above(left, right).ok);
  CHECK(code_of([] { is_high_above(std::span<const Point>(), std::span<const Point>()); }) ==
        ErrorCode::kEmptySet);
}

TEST_CASE("brute force oracle") {
  CHECK(brute_force_max_convex(build_es_baseline(4)) == 3);
  CHECK(brute_force_max_convex(build_es_baseline(5)) == 4);
  CHECK(code_of([] { brute_force_max_convex(build_pr(5)); }) == ErrorCode::kTooLarge);
}

TEST_CASE("dynamic programs agree with the reference oracles on random sets") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 5 + i % 8;
    const PointSet s = oracle::random_general_position(rng, n, 40);
    const auto p = oracle::to_ll(s);
    CAPTURE(i);
    CHECK(max_convex_subset(s).size == oracle::max_convex(p));
    CHECK(brute_force_max_convex(s) == oracle::max_convex(p));
    bool distinct_x = true;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) distinct_x &= p[a].x != p[b].x;
    if (distinct_x) {
      CHECK(max_cup(s).size == oracle::max_chain(p, 1));
      CHECK(max_cap(s).size == oracle::max_chain(p, -1));
    }
  }
}

TEST_CASE("results are invariant under translation, scaling and reflection") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 20; ++i) {
    const PointSet s = oracle::random_general_position(rng, 10, 1000);
    const int convex = max_convex_subset(s).size;
    const int empty = max_empty_convex_subset(s).size;
    for (const PointSet& u : {transform(s, 1, 0, 0, 1, 12345, -999), transform(s, 7, 0, 0, 7, 0, 0),
                              transform(s, -1, 0, 0, 1, 0, 0), transform(s, 1, 0, 0, -1, 0, 0),
                              transform(s, 0, 1, 1, 0, 0, 0)}) {
      CHECK(max_convex_subset(u).size == convex);
      CHECK(max_empty_convex_subset(u).size == empty);
    }
  }
  // Mirroring in the x-axis exchanges cups and caps.
  const PointSet s = build_skl_optimized(5, 4);
  const PointSet m = transform(s, 1, 0, 0, -1, 0, 0);
  CHECK(max_cup(m).size == max_cap(s).size);
  CHECK(max_cap(m).size == max_cup(s).size);
}

TEST_CASE("big coordinates take the exact path") {
  std::mt19937_64 rng(5);
  const BigInt big = BigInt(1) << 100;
  for (int i = 0; i < 10; ++i) {
    const PointSet small = oracle::random_general_position(rng, 9, 50);
    std::vector<Point> scaled;
    for (const auto& p : small.points()) scaled.push_back({p.x * big + 1, p.y * big - big});
    const PointSet s(std::move(scaled));
    CHECK(check_general_position(s).ok);
    CHECK(max_convex_subset(s).size == max_convex_subset(small).size);
    CHECK(max_empty_convex_subset(s).size == max_empty_convex_subset(small).size);
    CHECK(brute_force_max_convex(s) == oracle::max_convex(oracle::to_ll(small)));
  }
}

TEST_CASE("thread count does not change results") {
  const PointSet s = build_es_optimized(7);
  const auto one = max_convex_subset(s, {1});
  const auto many = max_convex_subset(s, {4});
  CHECK(one.size == many.size);
  CHECK(one.witness == many.witness);
  CHECK(max_empty_convex_subset(s, {1}).witness == max_empty_convex_subset(s, {0}).witness);
}

TEST_CASE("full report and claims") {
  const PointSet single = pts({{3, 4}});
  const auto r1 = full_report(single);
  CHECK(r1.n == 1);
  CHECK(r1.general_position);
  REQUIRE(r1.max_convex);
  CHECK(r1.max_convex->size == 1);

  const PointSet s6 = build_es_optimized(6);
  ReportOptions opts;
  opts.include_empty = true;
  opts.include_oracle = true;
  const auto r = full_report(s6, opts);
  CHECK(r.n == 16);
  CHECK(r.max_convex->size == 5);
  CHECK(r.brute_force_convex == 5);
  CHECK(claim_failures(s6, r).empty());

  // Same points claiming t = 5 must fail the convexity promise and the count.
  const PointSet lie(std::vector<Point>(s6.points().begin(), s6.points().end()),
                     ConstructionParams::es_optimized(5));
  CHECK(claim_failures(lie, full_report(lie)).size() == 2);

  const PointSet collinear = pts({{0, 0}, {1, 1}, {2, 2}});
  const auto rc = full_report(collinear);
  CHECK_FALSE(rc.general_position);
  CHECK_FALSE(rc.max_convex);
  CHECK_FALSE(claim_failures(collinear, rc).empty());

  const PointSet vertical = pts({{0, 0}, {0, 1}, {1, 5}});
  CHECK_FALSE(full_report(vertical).max_cup);
}
