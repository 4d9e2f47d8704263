#pragma once
// Slow reference implementations for the tests. They share no code with the
// library beyond the Point type and use different algorithms on purpose.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "esgrid/point_set.hpp"

namespace oracle {

struct P {
  long long x;
  long long y;
};

inline std::vector<P> to_ll(const esgrid::PointSet& s) {
  std::vector<P> out;
  for (const auto& p : s.points()) out.push_back({p.x.convert_to<long long>(), p.y.convert_to<long long>()});
  return out;
}

inline int turn(const P& a, const P& b, const P& c) {
  const __int128 v = static_cast<__int128>(b.x - a.x) * (c.y - a.y) -
                     static_cast<__int128>(b.y - a.y) * (c.x - a.x);
  return (v > 0) - (v < 0);
}

inline bool general_position(const std::vector<P>& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      for (std::size_t k = j + 1; k < p.size(); ++k)
        if (turn(p[i], p[j], p[k]) == 0) return false;
  return true;
}

// Points in general position are in convex position iff none lies inside a
// triangle spanned by three others.
inline bool convex_position(const std::vector<P>& p) {
  const std::size_t n = p.size();
  for (std::size_t d = 0; d < n; ++d)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        for (std::size_t c = b + 1; c < n; ++c) {
          if (d == a || d == b || d == c) continue;
          const int s1 = turn(p[a], p[b], p[d]);
          const int s2 = turn(p[b], p[c], p[d]);
          const int s3 = turn(p[c], p[a], p[d]);
          if (s1 == s2 && s2 == s3) return false;
        }
  return true;
}

template <class Pred>
int largest_subset(const std::vector<P>& p, Pred pred) {
  const std::size_t n = p.size();
  int best = std::min<int>(static_cast<int>(n), 2);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size <= best) continue;
    std::vector<P> sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) sub.push_back(p[i]);
    if (pred(sub)) best = size;
  }
  return best;
}

inline int max_convex(const std::vector<P>& p) { return largest_subset(p, convex_position); }

// Sign +1 for cups, -1 for caps. Assumes distinct x.
inline int max_chain(std::vector<P> p, int sign) {
  std::sort(p.begin(), p.end(), [](const P& a, const P& b) { return a.x < b.x; });
  return largest_subset(p, [sign](const std::vector<P>& sub) {
    for (std::size_t i = 2; i < sub.size(); ++i)
      if (turn(sub[i - 2], sub[i - 1], sub[i]) != sign) return false;
    return true;
  });
}

// n random points in [0, range)^2 in general position.
inline esgrid::PointSet random_general_position(std::mt19937_64& rng, std::size_t n, long long range) {
  std::uniform_int_distribution<long long> dist(0, range - 1);
  for (;;) {
    std::vector<P> p;
    while (p.size() < n) {
      const P q{dist(rng), dist(rng)};
      if (std::none_of(p.begin(), p.end(), [&](const P& r) { return r.x == q.x && r.y == q.y; })) {
        p.push_back(q);
      }
    }
    if (!general_position(p)) continue;
    std::vector<esgrid::Point> pts;
    for (const auto& q : p) pts.push_back({q.x, q.y});
    return esgrid::PointSet(std::move(pts));
  }
}

}  // namespace oracle
