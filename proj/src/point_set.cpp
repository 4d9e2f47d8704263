#include "esgrid/point_set.hpp"

#include <algorithm>
#include <sstream>

namespace esgrid {

const char* to_string(ConstructionKind kind) {
  switch (kind) {
    case ConstructionKind::kPr: return "PR";
    case ConstructionKind::kSklBaseline: return "SKL_BASELINE";
    case ConstructionKind::kSklOptimized: return "SKL_OPTIMIZED";
    case ConstructionKind::kEsBaseline: return "ES_BASELINE";
    case ConstructionKind::kEsOptimized: return "ES_OPTIMIZED";
  }
  return "UNKNOWN";
}

ConstructionKind parse_construction_kind(const std::string& name) {
  for (auto kind : {ConstructionKind::kPr, ConstructionKind::kSklBaseline,
                    ConstructionKind::kSklOptimized, ConstructionKind::kEsBaseline,
                    ConstructionKind::kEsOptimized}) {
    if (name == to_string(kind)) return kind;
  }
  throw Error(ErrorCode::kParseError, "unknown construction kind '" + name + "'");
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, what);
}

BigInt binomial(int n, int k) {
  BigInt c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

}  // namespace

ConstructionParams ConstructionParams::pr(int r) {
  require(r >= 0, "r must be >= 0");
  ConstructionParams p;
  p.kind = ConstructionKind::kPr;
  p.r = r;
  return p;
}

ConstructionParams ConstructionParams::skl_baseline(int k, int l) {
  require(k >= 2 && l >= 2, "k and l must be >= 2");
  ConstructionParams p;
  p.kind = ConstructionKind::kSklBaseline;
  p.k = k;
  p.l = l;
  return p;
}

ConstructionParams ConstructionParams::skl_optimized(int k, int l, bool unit_separation) {
  auto p = skl_baseline(k, l);
  p.kind = ConstructionKind::kSklOptimized;
  p.unit_separation = unit_separation;
  return p;
}

ConstructionParams ConstructionParams::es_baseline(int t) {
  require(t >= 2, "t must be >= 2");
  ConstructionParams p;
  p.kind = ConstructionKind::kEsBaseline;
  p.t = t;
  return p;
}

ConstructionParams ConstructionParams::es_optimized(int t, bool unit_separation) {
  auto p = es_baseline(t);
  p.kind = ConstructionKind::kEsOptimized;
  p.unit_separation = unit_separation;
  return p;
}

bool ConstructionParams::is_skl() const {
  return kind == ConstructionKind::kSklBaseline || kind == ConstructionKind::kSklOptimized;
}

bool ConstructionParams::is_es() const {
  return kind == ConstructionKind::kEsBaseline || kind == ConstructionKind::kEsOptimized;
}

bool ConstructionParams::is_optimized() const {
  return kind == ConstructionKind::kSklOptimized || kind == ConstructionKind::kEsOptimized;
}

BigInt ConstructionParams::expected_size() const {
  if (kind == ConstructionKind::kPr) return BigInt(1) << r;
  if (is_skl()) return binomial(k + l - 4, k - 2);
  return BigInt(1) << (t - 2);
}

std::string ConstructionParams::label() const {
  std::ostringstream os;
  os << to_string(kind);
  if (kind == ConstructionKind::kPr) {
    os << " r=" << r;
  } else if (is_skl()) {
    os << " k=" << k << " l=" << l;
  } else {
    os << " t=" << t;
  }
  if (is_optimized() && !unit_separation) os << " no-unit-sep";
  return os.str();
}

PointSet::PointSet(std::vector<Point> points, std::optional<ConstructionParams> params,
                   std::vector<BlockSpan> spans)
    : points_(std::move(points)), params_(std::move(params)), spans_(std::move(spans)) {
  std::vector<const Point*> sorted;
  sorted.reserve(points_.size());
  for (const auto& p : points_) sorted.push_back(&p);
  std::sort(sorted.begin(), sorted.end(), [](const Point* a, const Point* b) { return *a < *b; });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (*sorted[i] == *sorted[i - 1]) {
      std::ostringstream os;
      os << "point " << *sorted[i] << " occurs more than once";
      throw Error(ErrorCode::kDuplicatePoint, os.str());
    }
  }
  for (const auto& span : spans_) {
    if (span.begin > span.end || span.end > points_.size()) {
      throw Error(ErrorCode::kInvalidArgument, "block span out of range");
    }
  }
}

PointSet PointSet::without_metadata() const {
  PointSet copy;
  copy.points_ = points_;
  return copy;
}

namespace {

struct Extent {
  BigInt min_x, max_x, min_y, max_y;
};

Extent extent(const PointSet& s) {
  if (s.empty()) throw Error(ErrorCode::kEmptySet, "point set is empty");
  Extent e{s[0].x, s[0].x, s[0].y, s[0].y};
  for (const auto& p : s.points()) {
    if (p.x < e.min_x) e.min_x = p.x;
    if (p.x > e.max_x) e.max_x = p.x;
    if (p.y < e.min_y) e.min_y = p.y;
    if (p.y > e.max_y) e.max_y = p.y;
  }
  return e;
}

}  // namespace

GridBounds bounding_box(const PointSet& s) {
  const Extent e = extent(s);
  return {e.max_x - e.min_x, e.max_y - e.min_y};
}

PointSet translate(const PointSet& s, const Point& offset) {
  std::vector<Point> moved;
  moved.reserve(s.size());
  for (const auto& p : s.points()) moved.push_back(p + offset);
  return PointSet(std::move(moved), s.params(), s.spans());
}

PointSet normalize(const PointSet& s) {
  const Extent e = extent(s);
  return translate(s, Point{-e.min_x, -e.min_y});
}

}  // namespace esgrid
