#include "esgrid/constructions.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <tuple>
#include <utility>

#include "esgrid/verification.hpp"

namespace esgrid {

namespace {

BigInt pow4(int e) { return BigInt(1) << (2 * e); }

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, what);
}

std::vector<Point> shifted(const std::vector<Point>& pts, const Point& offset) {
  std::vector<Point> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(p + offset);
  return out;
}

std::vector<Point> concat(std::vector<Point> left, const std::vector<Point>& right) {
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

std::string block_label(int k, int l) {
  return "S(" + std::to_string(k) + "," + std::to_string(l) + ")";
}

// S(k, l) with the shifts of level r = k + l - 1 of P_r, which makes it a
// literal subset of build_pr(k + l - 1).
std::vector<Point> skl_baseline_points(int k, int l, std::map<std::pair<int, int>, std::vector<Point>>& memo) {
  if (k <= 2 || l <= 2) return {Point{0, 0}};
  const auto key = std::make_pair(k, l);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const LevelGeometry g = level_geometry(k + l - 1);
  auto pts = concat(skl_baseline_points(k - 1, l, memo),
                    shifted(skl_baseline_points(k, l - 1, memo), Point{g.delta, g.delta_prime}));
  memo.emplace(key, pts);
  return pts;
}

}  // namespace

LevelGeometry level_geometry(int r) {
  require(r >= 0, "level must be >= 0");
  LevelGeometry g;
  g.r = r;
  if (r == 0) return g;
  g.delta = 3 * pow4(r - 1);
  g.delta_prime = (3 * r + 1) * pow4(r - 1);
  g.x_extent = pow4(r) - 1;
  g.y_extent = r * pow4(r);
  return g;
}

PointSet build_pr(int r) {
  require(r >= 0, "r must be >= 0");
  std::vector<Point> pts{Point{0, 0}};
  for (int level = 1; level <= r; ++level) {
    const LevelGeometry g = level_geometry(level);
    pts = concat(pts, shifted(pts, Point{g.delta, g.delta_prime}));
  }
  return PointSet(std::move(pts), ConstructionParams::pr(r));
}

PointSet build_skl_baseline(int k, int l) {
  const auto params = ConstructionParams::skl_baseline(k, l);
  std::map<std::pair<int, int>, std::vector<Point>> memo;
  return PointSet(skl_baseline_points(k, l, memo), params);
}

BigInt es_baseline_bound(int t) {
  require(t >= 2, "t must be >= 2");
  return 3 * BigInt(t) * t * (t + 1) * pow4(t + 1);
}

PointSet build_es_baseline(int t) {
  const auto params = ConstructionParams::es_baseline(t);
  // Block i sits at scale * w_i, where w_0 = 0 and w_i = w_{i-1} + (3(t-i), -3i).
  // Each block is a subset of P_{t+1}, whose extents are below `scale`.
  const BigInt scale = BigInt(t + 1) * pow4(t + 1);
  std::map<std::pair<int, int>, std::vector<Point>> memo;
  std::vector<Point> pts;
  std::vector<BlockSpan> spans;
  Point corner{0, 0};
  for (int i = 0; i <= t - 2; ++i) {
    if (i > 0) corner = corner + Point{3 * BigInt(t - i), -3 * BigInt(i)};
    const Point offset{scale * corner.x, scale * corner.y};
    const auto block = shifted(skl_baseline_points(t - i, i + 2, memo), offset);
    spans.push_back({pts.size(), pts.size() + block.size(), block_label(t - i, i + 2)});
    pts = concat(std::move(pts), block);
  }
  return normalize(PointSet(std::move(pts), params, std::move(spans)));
}

std::vector<BigInt> optimized_x_extents(int r_max) {
  require(r_max >= 0, "r_max must be >= 0");
  std::vector<BigInt> out;
  const QuadValue base{2, 1};
  QuadValue power{1, 0};
  for (int r = 0; r <= r_max; ++r) {
    out.push_back(quad_ceil(power));
    power = power * base;
  }
  return out;
}

namespace {

// ceil((1 + sqrt 3) * a / 2) for a >= 0.
BigInt half_one_plus_sqrt3(const BigInt& a) {
  if (a == 0) return 0;
  // a + a sqrt 3 is irrational, so its floor is one below its ceiling and
  // ceil(v / 2) = floor(floor(v) / 2) + 1.
  const BigInt floor_v = quad_ceil(QuadValue{a, a}) - 1;
  return floor_div(floor_v, 2) + 1;
}

struct SklNode {
  std::vector<Point> pts;  // sorted by x, leftmost at (0, 0)
  // Line through the rightmost point of the left part and the leftmost point
  // of the right part; absent for a single point.
  std::optional<std::pair<Point, Point>> line;
};

using SklMemo = std::map<std::tuple<int, int, bool>, SklNode>;

bool strictly_increasing_y(const std::vector<Point>& pts) {
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (!(pts[i - 1].y < pts[i].y)) return false;
  }
  return true;
}

// Least d with p + (0, d) strictly above the line through a, b (a.x < b.x).
BigInt least_lift_above(const Point& p, const Point& a, const Point& b) {
  const BigInt dx = b.x - a.x;
  const BigInt dy = b.y - a.y;
  return floor_div((a.y - p.y) * dx + dy * (p.x - a.x), dx) + 1;
}

// Least d with p strictly below the line through a + (0, d), b + (0, d).
BigInt least_lift_line_above(const Point& p, const Point& a, const Point& b) {
  const BigInt dx = b.x - a.x;
  const BigInt dy = b.y - a.y;
  return floor_div((p.y - a.y) * dx - dy * (p.x - a.x), dx) + 1;
}

bool skl_step_ok(const std::vector<Point>& pts, int k, int l) {
  if (!strictly_increasing_y(pts)) return false;
  const PointSet s(pts);
  if (!check_general_position(s).ok) return false;
  return max_cup(s).size <= k - 1 && max_cap(s).size <= l - 1;
}

const SklNode& skl_optimized_node(int k, int l, bool unit_separation, SklMemo& memo) {
  const auto key = std::make_tuple(k, l, unit_separation);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  SklNode node;
  if (k <= 2 || l <= 2) {
    node.pts = {Point{0, 0}};
    return memo.emplace(key, std::move(node)).first->second;
  }
  const SklNode left = skl_optimized_node(k - 1, l, false, memo);
  const SklNode right = skl_optimized_node(k, l - 1, false, memo);
  const BigInt xl = left.pts.back().x;
  const BigInt xr = right.pts.back().x;

  BigInt dx = xl + 1;
  if (!unit_separation) {
    dx = half_one_plus_sqrt3(xl + xr);
    // R must start right of L; the formula alone can fall short when the
    // children are very unbalanced.
    if (dx < xl + 1) dx = xl + 1;
  }

  // Smallest positive lift putting R's rightmost point above L's line and
  // L's leftmost point below R's translated line.
  BigInt dy = 1;
  const Point r_last{right.pts.back().x + dx, right.pts.back().y};
  if (left.line) {
    const BigInt need = least_lift_above(r_last, left.line->first, left.line->second);
    if (need > dy) dy = need;
  }
  if (right.line) {
    const Point a = right.line->first + Point{dx, 0};
    const Point b = right.line->second + Point{dx, 0};
    const BigInt need = least_lift_line_above(left.pts.front(), a, b);
    if (need > dy) dy = need;
  }

  // The verifiers have the last word; the baseline lift is known to work.
  const BigInt cap = level_geometry(k + l - 1).delta_prime;
  for (;; dy += 1) {
    if (dy > cap) {
      throw Error(ErrorCode::kConstructionFailed,
                  "no vertical shift up to " + cap.str() + " for " + block_label(k, l));
    }
    auto pts = concat(left.pts, shifted(right.pts, Point{dx, dy}));
    const Point shift{dx, dy};
    const bool above = !left.line ||
        point_side(r_last + Point{0, dy}, Line(left.line->first, left.line->second)) == Side::kAbove;
    const bool below = !right.line ||
        point_side(left.pts.front(), Line(right.line->first + shift, right.line->second + shift)) ==
            Side::kBelow;
    if (above && below && skl_step_ok(pts, k, l)) {
      node.pts = std::move(pts);
      node.line = std::make_pair(left.pts.back(), right.pts.front() + shift);
      break;
    }
  }
  return memo.emplace(key, std::move(node)).first->second;
}

// Compact S_t layout. Each block is replaced by its bounding rectangle; the
// four corners stand in for the block because every constraint below is
// affine in each point separately.
//
// Given the horizontal gaps, blocks are stacked left to right and each one
// is lifted as high as allowed: all corners strictly below every corner of
// earlier blocks (cross-block slopes negative) and strictly below every line
// through corners of two earlier blocks (cross-block triples turn right).
class BlockLayout {
 public:
  explicit BlockLayout(std::vector<GridBounds> boxes) {
    const std::int64_t limit = std::int64_t{1} << 40;
    for (const auto& b : boxes) {
      if (b.width >= limit || b.height >= limit) {
        throw Error(ErrorCode::kTooLarge, "blocks too large for the compact layout");
      }
      w_.push_back(b.width.convert_to<std::int64_t>());
      h_.push_back(b.height.convert_to<std::int64_t>());
    }
  }

  std::size_t size() const { return w_.size(); }

  // Lower-left corners of every block; block 0 sits at the origin.
  std::vector<std::pair<std::int64_t, std::int64_t>> place(const std::vector<std::int64_t>& gaps) const {
    const std::size_t m = w_.size();
    std::vector<std::pair<std::int64_t, std::int64_t>> origin(m);
    std::vector<std::array<std::pair<std::int64_t, std::int64_t>, 4>> corners(m);
    std::int64_t x = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (j > 0) x += w_[j - 1] + gaps[j];
      std::int64_t y = 0;
      if (j > 0) {
        // Upper bound on the lift of the block's corners taken at y = 0.
        __int128 ub = std::numeric_limits<std::int64_t>::max();
        const auto local = rect(x, 0, j);
        for (std::size_t i = 0; i < j; ++i) {
          for (const auto& a : corners[i]) {
            for (const auto& c : local) ub = std::min<__int128>(ub, a.second - c.second - 1);
          }
        }
        for (std::size_t i = 0; i < j; ++i) {
          for (std::size_t h = i + 1; h < j; ++h) {
            for (const auto& a : corners[i]) {
              for (const auto& b : corners[h]) {
                const __int128 ddx = b.first - a.first;
                const __int128 ddy = b.second - a.second;
                for (const auto& c : local) {
                  // (c.y + lift - a.y) * ddx < ddy * (c.x - a.x)
                  const __int128 num = ddy * (c.first - a.first);
                  __int128 q = num / ddx;
                  if (num % ddx != 0 && num < 0) --q;
                  const __int128 strict = (num % ddx == 0) ? q - 1 : q;
                  ub = std::min<__int128>(ub, strict - c.second + a.second);
                }
              }
            }
          }
        }
        y = static_cast<std::int64_t>(ub);
      }
      origin[j] = {x, y};
      corners[j] = rect(x, y, j);
    }
    return origin;
  }

  // Width and height of the whole layout.
  std::pair<std::int64_t, std::int64_t> extent(const std::vector<std::int64_t>& gaps) const {
    const auto origin = place(gaps);
    std::int64_t y0 = 0, y1 = 0;
    for (std::size_t j = 0; j < origin.size(); ++j) {
      y0 = std::min(y0, origin[j].second);
      y1 = std::max(y1, origin[j].second + h_[j]);
    }
    return {origin.back().first + w_.back(), y1 - y0};
  }

 private:
  std::array<std::pair<std::int64_t, std::int64_t>, 4> rect(std::int64_t x, std::int64_t y, std::size_t j) const {
    return {{{x, y}, {x + w_[j], y}, {x, y + h_[j]}, {x + w_[j], y + h_[j]}}};
  }

  std::vector<std::int64_t> w_;
  std::vector<std::int64_t> h_;
};

// Smaller half-perimeter first, then the smaller long side.
bool better(std::pair<std::int64_t, std::int64_t> a, std::pair<std::int64_t, std::int64_t> b) {
  const auto ka = std::make_pair(a.first + a.second, std::max(a.first, a.second));
  const auto kb = std::make_pair(b.first + b.second, std::max(b.first, b.second));
  return ka < kb;
}

// Deterministic coordinate descent over the gaps from a few starting
// layouts; gap j ranges over [1, max_gap].
std::vector<std::int64_t> choose_gaps(const BlockLayout& layout, std::int64_t max_gap) {
  const std::size_t m = layout.size();
  std::vector<std::int64_t> best(m, 1);
  auto best_ext = layout.extent(best);
  for (std::int64_t start : {std::int64_t{1}, max_gap / 8, max_gap / 4, max_gap / 2}) {
    std::vector<std::int64_t> gaps(m, std::max<std::int64_t>(start, 1));
    auto ext = layout.extent(gaps);
    for (bool improved = true; improved;) {
      improved = false;
      for (std::size_t j = 1; j < m; ++j) {
        for (std::int64_t g = 1; g <= max_gap; ++g) {
          if (g == gaps[j]) continue;
          auto trial = gaps;
          trial[j] = g;
          const auto e = layout.extent(trial);
          if (better(e, ext)) {
            gaps = std::move(trial);
            ext = e;
            improved = true;
          }
        }
      }
    }
    if (better(ext, best_ext)) {
      best = gaps;
      best_ext = ext;
    }
  }
  return best;
}

}  // namespace

PointSet build_skl_optimized(int k, int l, bool unit_separation) {
  const auto params = ConstructionParams::skl_optimized(k, l, unit_separation);
  SklMemo memo;
  return PointSet(skl_optimized_node(k, l, unit_separation, memo).pts, params);
}

PointSet build_es_optimized(int t, bool unit_separation) {
  const auto params = ConstructionParams::es_optimized(t, unit_separation);
  SklMemo memo;
  std::vector<std::vector<Point>> blocks;
  std::vector<GridBounds> boxes;
  std::int64_t max_gap = 2;
  for (int i = 0; i <= t - 2; ++i) {
    blocks.push_back(skl_optimized_node(t - i, i + 2, unit_separation, memo).pts);
    boxes.push_back(bounding_box(PointSet(blocks.back())));
  }
  const BlockLayout layout(boxes);
  for (const auto& b : boxes) {
    max_gap += b.width.convert_to<std::int64_t>() + b.height.convert_to<std::int64_t>();
  }
  const auto origin = layout.place(choose_gaps(layout, max_gap));

  std::vector<Point> pts;
  std::vector<BlockSpan> spans;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    // Blocks are stored with their lower-left corner at the origin.
    const auto block = shifted(blocks[i], Point{origin[i].first, origin[i].second});
    const int bk = t - static_cast<int>(i);
    const int bl = static_cast<int>(i) + 2;
    spans.push_back({pts.size(), pts.size() + block.size(), block_label(bk, bl)});
    pts = concat(std::move(pts), block);
  }
  return normalize(PointSet(std::move(pts), params, std::move(spans)));
}

PointSet build(const ConstructionParams& params) {
  switch (params.kind) {
    case ConstructionKind::kPr: return build_pr(params.r);
    case ConstructionKind::kSklBaseline: return build_skl_baseline(params.k, params.l);
    case ConstructionKind::kSklOptimized:
      return build_skl_optimized(params.k, params.l, params.unit_separation);
    case ConstructionKind::kEsBaseline: return build_es_baseline(params.t);
    case ConstructionKind::kEsOptimized: return build_es_optimized(params.t, params.unit_separation);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown construction kind");
}

}  // namespace esgrid
