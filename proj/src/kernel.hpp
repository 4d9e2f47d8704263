#pragma once
// Coordinate back ends for the verifiers. Small inputs run on int64 with
// __int128 cross products; anything larger falls back to BigInt.

#include <cstdint>
#include <span>
#include <vector>

#include "esgrid/arith.hpp"

namespace esgrid::detail {

struct P64 {
  std::int64_t x;
  std::int64_t y;
};

inline int orient(const P64& p, const P64& q, const P64& r) {
  const __int128 cross = static_cast<__int128>(q.x - p.x) * (r.y - p.y) -
                         static_cast<__int128>(q.y - p.y) * (r.x - p.x);
  return (cross > 0) - (cross < 0);
}

inline int orient(const Point& p, const Point& q, const Point& r) {
  return static_cast<int>(esgrid::orientation(p, q, r));
}

inline bool x_less(const P64& a, const P64& b) { return a.x < b.x; }
inline bool x_less(const Point& a, const Point& b) { return a.x < b.x; }
inline bool x_equal(const P64& a, const P64& b) { return a.x == b.x; }
inline bool x_equal(const Point& a, const Point& b) { return a.x == b.x; }

// Lexicographic (y, x): the anchor of a convex polygon is its minimum.
inline bool yx_less(const P64& a, const P64& b) {
  return a.y != b.y ? a.y < b.y : a.x < b.x;
}
inline bool yx_less(const Point& a, const Point& b) {
  return a.y != b.y ? a.y < b.y : a.x < b.x;
}

// Differences of coordinates below 2^61 stay below 2^62, so each product is
// below 2^124 and the cross product cannot overflow 128 bits.
inline bool fits_fast(std::span<const Point> pts) {
  static const BigInt kLimit = BigInt(1) << 61;
  for (const auto& p : pts) {
    if (abs(p.x) >= kLimit || abs(p.y) >= kLimit) return false;
  }
  return true;
}

inline std::vector<P64> to_fast(std::span<const Point> pts) {
  std::vector<P64> out;
  out.reserve(pts.size());
  for (const auto& p : pts) {
    out.push_back({p.x.convert_to<std::int64_t>(), p.y.convert_to<std::int64_t>()});
  }
  return out;
}

// Calls fn(points) with either a std::vector<P64> or the original BigInt span.
template <class Fn>
decltype(auto) dispatch(std::span<const Point> pts, Fn&& fn) {
  if (fits_fast(pts)) {
    const std::vector<P64> fast = to_fast(pts);
    return fn(std::span<const P64>(fast));
  }
  return fn(pts);
}

}  // namespace esgrid::detail
