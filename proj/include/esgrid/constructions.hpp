#pragma once
/**
 * Generators for the Erdős–Szekeres point configurations.
 *
 * Point order is part of the contract:
 *  - build_pr(r) lists the 2^(r-1) points of the left half (itself
 *    build_pr(r-1)) before their translates.
 *  - build_skl_*(k, l) lists S(k-1, l) before the translated S(k, l-1).
 *  - build_es_*(t) lists block i = S(t-i, i+2) for i = 0..t-2 in order and
 *    records each block in PointSet::spans().
 *
 * The baseline variants use closed-form shifts with proven bounds. The
 * compact variants size the horizontal gaps with 1+sqrt(3) and choose
 * every vertical gap as the least one that keeps the required cup/cap and
 * turn structure, which shrinks the grid by orders of magnitude.
 */

#include <optional>
#include <vector>

#include "esgrid/arith.hpp"
#include "esgrid/point_set.hpp"

namespace esgrid {

/// Horizontal/vertical shift of level r of P_r and the resulting extents.
struct LevelGeometry {
  int r = 0;
  BigInt delta;        // 3 * 4^(r-1)
  BigInt delta_prime;  // (3r + 1) * 4^(r-1)
  BigInt x_extent;     // 4^r - 1
  BigInt y_extent;     // r * 4^r

  friend bool operator==(const LevelGeometry&, const LevelGeometry&) = default;
};

LevelGeometry level_geometry(int r);

PointSet build_pr(int r);

PointSet build_skl_baseline(int k, int l);

/// Upper bound 3 t^2 (t+1) 4^(t+1) on every coordinate of build_es_baseline(t).
BigInt es_baseline_bound(int t);

PointSet build_es_baseline(int t);

/// ceil((2 + sqrt 3)^r) for r = 0..r_max.
std::vector<BigInt> optimized_x_extents(int r_max);

PointSet build_skl_optimized(int k, int l, bool unit_separation = true);

PointSet build_es_optimized(int t, bool unit_separation = true);

/// Dispatches on params.kind.
PointSet build(const ConstructionParams& params);

}  // namespace esgrid
