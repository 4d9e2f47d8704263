#include "esgrid/verification.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>
#include <sstream>
#include <thread>

#include "kernel.hpp"

namespace esgrid {

namespace {

using detail::orient;

template <class P>
std::optional<std::array<std::size_t, 3>> find_collinear(std::span<const P> pts) {
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (orient(pts[i], pts[j], pts[k]) == 0) return std::array{i, j, k};
      }
    }
  }
  return std::nullopt;
}

void require_general_position(const PointSet& s) {
  const auto gp = check_general_position(s);
  if (!gp.ok) {
    const auto& w = *gp.witness;
    std::ostringstream os;
    os << "collinear triple " << s[w[0]] << ' ' << s[w[1]] << ' ' << s[w[2]];
    throw Error(ErrorCode::kNotGeneralPosition, os.str());
  }
}

// ---------------------------------------------------------------------------
// Cups and caps.

template <class P>
Witnessed longest_chain(std::span<const P> pts, int turn) {
  const std::size_t n = pts.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return detail::x_less(pts[a], pts[b]); });
  for (std::size_t i = 1; i < n; ++i) {
    if (detail::x_equal(pts[order[i - 1]], pts[order[i]])) {
      throw Error(ErrorCode::kDuplicateX, "two points share an x-coordinate");
    }
  }
  if (n <= 2) return {static_cast<int>(n), order};

  // len[i*n+j]: longest chain ending with the edge order[i] -> order[j], i < j.
  std::vector<int> len(n * n, 2);
  std::vector<std::size_t> parent(n * n, n);
  int best = 2;
  std::size_t best_i = 0, best_j = 1;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      int& cur = len[i * n + j];
      for (std::size_t h = 0; h < i; ++h) {
        if (len[h * n + i] + 1 > cur &&
            orient(pts[order[h]], pts[order[i]], pts[order[j]]) == turn) {
          cur = len[h * n + i] + 1;
          parent[i * n + j] = h;
        }
      }
      if (cur > best) {
        best = cur;
        best_i = i;
        best_j = j;
      }
    }
  }
  std::vector<std::size_t> chain{order[best_j], order[best_i]};
  for (std::size_t i = best_i, j = best_j; parent[i * n + j] != n;) {
    const std::size_t h = parent[i * n + j];
    chain.push_back(order[h]);
    j = i;
    i = h;
  }
  std::reverse(chain.begin(), chain.end());
  return {best, chain};
}

// ---------------------------------------------------------------------------
// Convex polygons anchored at their lowest vertex.
//
// For an anchor a, every other vertex of a polygon whose lowest (y, x) vertex
// is a lies in the open upper half-plane around a (or on the ray to the right).
// Sorting those candidates by angle turns the polygon into an increasing
// sequence; len[i][j] is the most vertices of a convex chain a, ..., c_i, c_j.

struct AnchorResult {
  int size = 0;
  std::vector<std::size_t> polygon;
};

template <class P>
AnchorResult best_from_anchor(std::span<const P> pts, std::size_t anchor, bool require_empty) {
  const std::size_t n = pts.size();
  const P& a = pts[anchor];
  std::vector<std::size_t> cand;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != anchor && detail::yx_less(a, pts[i])) cand.push_back(i);
  }
  std::sort(cand.begin(), cand.end(),
            [&](std::size_t u, std::size_t v) { return orient(a, pts[u], pts[v]) > 0; });
  const std::size_t m = cand.size();

  AnchorResult result{1, {anchor}};
  if (m == 0) return result;
  result = {2, {anchor, cand[0]}};
  if (m == 1) return result;

  // Triangle (a, c_i, c_j) is empty iff no candidate strictly between them in
  // angular order lies on a's side of c_i c_j; nothing below a can be inside.
  std::vector<char> empty_tri;
  if (require_empty) {
    empty_tri.assign(m * m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        bool empty = true;
        for (std::size_t h = i + 1; h < j && empty; ++h) {
          if (orient(pts[cand[i]], pts[cand[j]], pts[cand[h]]) > 0) empty = false;
        }
        empty_tri[i * m + j] = empty;
      }
    }
  }

  constexpr int kUnset = 0;
  std::vector<int> len(m * m, kUnset);
  std::vector<std::size_t> parent(m * m, m);
  int best = 2;
  std::size_t best_i = m, best_j = m;
  for (std::size_t j = 1; j < m; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (require_empty && !empty_tri[i * m + j]) continue;
      int cur = 3;
      std::size_t par = m;
      for (std::size_t h = 0; h < i; ++h) {
        const int prev = len[h * m + i];
        if (prev != kUnset && prev + 1 > cur &&
            orient(pts[cand[h]], pts[cand[i]], pts[cand[j]]) > 0) {
          cur = prev + 1;
          par = h;
        }
      }
      len[i * m + j] = cur;
      parent[i * m + j] = par;
      // The chain closes into a convex polygon when it turns left back to a.
      if (cur > best && orient(pts[cand[i]], pts[cand[j]], a) > 0) {
        best = cur;
        best_i = i;
        best_j = j;
      }
    }
  }
  if (best_i == m) return result;

  std::vector<std::size_t> rev{cand[best_j], cand[best_i]};
  for (std::size_t i = best_i, j = best_j; parent[i * m + j] != m;) {
    const std::size_t h = parent[i * m + j];
    rev.push_back(cand[h]);
    j = i;
    i = h;
  }
  result.size = best;
  result.polygon = {anchor};
  result.polygon.insert(result.polygon.end(), rev.rbegin(), rev.rend());
  return result;
}

template <class P>
Witnessed best_polygon(std::span<const P> pts, bool require_empty, unsigned threads) {
  const std::size_t n = pts.size();
  std::vector<AnchorResult> per_anchor(n);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t a = next++; a < n; a = next++) {
      per_anchor[a] = best_from_anchor(pts, a, require_empty);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  // Assembly is independent of scheduling: the first anchor (by index) with
  // the maximum wins.
  Witnessed out;
  for (const auto& r : per_anchor) {
    if (r.size > out.size) out = {r.size, r.polygon};
  }
  return out;
}

template <class P>
std::size_t hull_size(std::vector<P> pts) {
  const std::size_t n = pts.size();
  if (n < 3) return n;
  std::sort(pts.begin(), pts.end(), [](const P& a, const P& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  std::vector<P> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  return k - 1;
}

template <class P>
int brute_force(std::span<const P> pts) {
  const std::size_t n = pts.size();
  int best = static_cast<int>(std::min<std::size_t>(n, 3));
  std::vector<P> subset;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    const int k = std::popcount(mask);
    if (k <= best) continue;
    subset.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint32_t{1} << i)) subset.push_back(pts[i]);
    }
    if (hull_size(subset) == subset.size()) best = k;
  }
  return best;
}

template <class P>
std::optional<HighAboveViolation> high_above_violation(std::span<const P> upper,
                                                       std::span<const P> lower,
                                                       std::span<const Point> upper_big,
                                                       std::span<const Point> lower_big) {
  // Lines through two points of `from` must leave every point of `others`
  // strictly on `side` (+1 above, -1 below).
  auto scan = [](std::span<const P> from, std::span<const P> others, int side)
      -> std::optional<std::array<std::size_t, 3>> {
    for (std::size_t i = 0; i < from.size(); ++i) {
      for (std::size_t j = i + 1; j < from.size(); ++j) {
        // Orient the pair left to right; a vertical pair has no above/below.
        std::size_t lo = i, hi = j;
        if (detail::x_less(from[hi], from[lo])) std::swap(lo, hi);
        const bool vertical = detail::x_equal(from[lo], from[hi]);
        for (std::size_t k = 0; k < others.size(); ++k) {
          if (vertical || orient(from[lo], from[hi], others[k]) != side) {
            return std::array{lo, hi, k};
          }
        }
      }
    }
    return std::nullopt;
  };
  if (auto v = scan(upper, lower, -1)) {
    return HighAboveViolation{true, upper_big[(*v)[0]], upper_big[(*v)[1]], lower_big[(*v)[2]]};
  }
  if (auto v = scan(lower, upper, +1)) {
    return HighAboveViolation{false, lower_big[(*v)[0]], lower_big[(*v)[1]], upper_big[(*v)[2]]};
  }
  return std::nullopt;
}

}  // namespace

GeneralPositionResult check_general_position(const PointSet& s) {
  auto witness = detail::dispatch(s.points(), [](auto pts) { return find_collinear(pts); });
  return {!witness.has_value(), witness};
}

Witnessed max_cup(const PointSet& s) {
  return detail::dispatch(s.points(), [](auto pts) { return longest_chain(pts, +1); });
}

Witnessed max_cap(const PointSet& s) {
  return detail::dispatch(s.points(), [](auto pts) { return longest_chain(pts, -1); });
}

Witnessed max_convex_subset(const PointSet& s, const VerifyOptions& options) {
  require_general_position(s);
  return detail::dispatch(s.points(),
                          [&](auto pts) { return best_polygon(pts, false, options.threads); });
}

Witnessed max_empty_convex_subset(const PointSet& s, const VerifyOptions& options) {
  require_general_position(s);
  return detail::dispatch(s.points(),
                          [&](auto pts) { return best_polygon(pts, true, options.threads); });
}

HighAboveResult is_high_above(std::span<const Point> upper, std::span<const Point> lower) {
  if (upper.empty() || lower.empty()) {
    throw Error(ErrorCode::kEmptySet, "high-above needs two non-empty sets");
  }
  std::optional<HighAboveViolation> v;
  if (detail::fits_fast(upper) && detail::fits_fast(lower)) {
    const auto fu = detail::to_fast(upper);
    const auto fl = detail::to_fast(lower);
    v = high_above_violation<detail::P64>(fu, fl, upper, lower);
  } else {
    v = high_above_violation<Point>(upper, lower, upper, lower);
  }
  return {!v.has_value(), v};
}

HighAboveResult is_high_above(const PointSet& upper, const PointSet& lower) {
  return is_high_above(upper.points(), lower.points());
}

int brute_force_max_convex(const PointSet& s) {
  if (s.size() > kBruteForceLimit) {
    throw Error(ErrorCode::kTooLarge, "brute force is limited to " +
                                          std::to_string(kBruteForceLimit) + " points");
  }
  require_general_position(s);
  return detail::dispatch(s.points(), [](auto pts) { return brute_force(pts); });
}

namespace {

std::vector<std::size_t> ccw_hull(const PointSet& s, std::vector<std::size_t> idx) {
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return s[a] < s[b]; });
  const std::size_t n = idx.size();
  if (n < 3) return idx;
  std::vector<std::size_t> hull(2 * n);
  std::size_t k = 0;
  auto turn = [&](std::size_t a, std::size_t b, std::size_t c) {
    return orientation(s[a], s[b], s[c]);
  };
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && turn(hull[k - 2], hull[k - 1], idx[i]) != Orientation::kLeftTurn) --k;
    hull[k++] = idx[i];
  }
  for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && turn(hull[k - 2], hull[k - 1], idx[i]) != Orientation::kLeftTurn) --k;
    hull[k++] = idx[i];
  }
  hull.resize(k - 1);
  return hull;
}

bool is_chain(const PointSet& s, const std::vector<std::size_t>& chain, Orientation turn) {
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (chain[i] >= s.size()) return false;
    if (i > 0 && !(s[chain[i - 1]].x < s[chain[i]].x)) return false;
    if (i > 1 && orientation(s[chain[i - 2]], s[chain[i - 1]], s[chain[i]]) != turn) return false;
  }
  return true;
}

}  // namespace

std::vector<std::size_t> convex_hull(const PointSet& s) {
  std::vector<std::size_t> idx(s.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return ccw_hull(s, std::move(idx));
}

bool is_cup(const PointSet& s, const std::vector<std::size_t>& chain) {
  return is_chain(s, chain, Orientation::kLeftTurn);
}

bool is_cap(const PointSet& s, const std::vector<std::size_t>& chain) {
  return is_chain(s, chain, Orientation::kRightTurn);
}

bool is_convex_polygon(const PointSet& s, const std::vector<std::size_t>& polygon) {
  const std::size_t k = polygon.size();
  for (auto i : polygon) {
    if (i >= s.size()) return false;
  }
  std::vector<std::size_t> sorted = polygon;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (k < 3) return true;
  // Convex position and the given order is the counter-clockwise hull order.
  const std::vector<std::size_t> hull = ccw_hull(s, sorted);
  if (hull.size() != k) return false;
  const auto start = std::find(hull.begin(), hull.end(), polygon[0]);
  for (std::size_t i = 0; i < k; ++i) {
    const auto offset = static_cast<std::size_t>(start - hull.begin());
    if (hull[(offset + i) % k] != polygon[i]) return false;
  }
  return true;
}

bool is_empty_polygon(const PointSet& s, const std::vector<std::size_t>& polygon) {
  if (!is_convex_polygon(s, polygon)) return false;
  const std::size_t k = polygon.size();
  if (k < 3) return true;
  std::vector<char> used(s.size(), 0);
  for (auto i : polygon) used[i] = 1;
  for (std::size_t p = 0; p < s.size(); ++p) {
    if (used[p]) continue;
    bool inside = true;
    for (std::size_t i = 0; i < k && inside; ++i) {
      if (orientation(s[polygon[i]], s[polygon[(i + 1) % k]], s[p]) != Orientation::kLeftTurn) {
        inside = false;
      }
    }
    if (inside) return false;
  }
  return true;
}

VerificationReport full_report(const PointSet& s, const ReportOptions& options) {
  VerificationReport r;
  r.n = s.size();
  r.bounds = bounding_box(s);

  const auto gp = check_general_position(s);
  r.general_position = gp.ok;
  r.collinear_witness = gp.witness;

  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kInvalidArgument, "witness re-check failed: " + what);
  };

  try {
    r.max_cup = max_cup(s);
    r.max_cap = max_cap(s);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kDuplicateX) throw;
    r.max_cup.reset();
    r.max_cap.reset();
  }
  if (r.max_cup && (!is_cup(s, r.max_cup->witness) ||
                    static_cast<int>(r.max_cup->witness.size()) != r.max_cup->size)) {
    fail("cup");
  }
  if (r.max_cap && (!is_cap(s, r.max_cap->witness) ||
                    static_cast<int>(r.max_cap->witness.size()) != r.max_cap->size)) {
    fail("cap");
  }

  if (r.general_position) {
    r.max_convex = max_convex_subset(s, options.verify);
    if (!is_convex_polygon(s, r.max_convex->witness) ||
        static_cast<int>(r.max_convex->witness.size()) != r.max_convex->size) {
      fail("convex polygon");
    }
    if (options.include_empty) {
      r.max_empty_convex = max_empty_convex_subset(s, options.verify);
      if (!is_empty_polygon(s, r.max_empty_convex->witness) ||
          static_cast<int>(r.max_empty_convex->witness.size()) != r.max_empty_convex->size) {
        fail("empty polygon");
      }
    }
    if (options.include_oracle && s.size() <= kBruteForceLimit) {
      r.brute_force_convex = brute_force_max_convex(s);
    }
  }
  return r;
}

std::vector<std::string> claim_failures(const PointSet& s, const VerificationReport& report) {
  std::vector<std::string> out;
  if (!report.general_position) out.push_back("not in general position");
  if (report.brute_force_convex && report.max_convex &&
      *report.brute_force_convex != report.max_convex->size) {
    out.push_back("convex subset search disagrees with brute force");
  }
  if (!s.params()) return out;
  const ConstructionParams& p = *s.params();
  if (BigInt(s.size()) != p.expected_size()) {
    out.push_back("expected " + p.expected_size().str() + " points, found " +
                  std::to_string(s.size()));
  }
  if (p.is_skl()) {
    if (!report.max_cup || !report.max_cap) {
      out.push_back("cups/caps undefined: repeated x-coordinates");
    } else {
      if (report.max_cup->size > p.k - 1) {
        out.push_back("contains a " + std::to_string(report.max_cup->size) + "-cup (k=" +
                      std::to_string(p.k) + ")");
      }
      if (report.max_cap->size > p.l - 1) {
        out.push_back("contains a " + std::to_string(report.max_cap->size) + "-cap (l=" +
                      std::to_string(p.l) + ")");
      }
    }
  }
  if (p.is_es() && report.max_convex && report.max_convex->size > p.t - 1) {
    out.push_back("contains a convex " + std::to_string(report.max_convex->size) +
                  "-gon (t=" + std::to_string(p.t) + ")");
  }
  return out;
}

}  // namespace esgrid
