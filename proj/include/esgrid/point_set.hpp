#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "esgrid/arith.hpp"

namespace esgrid {

enum class ConstructionKind { kPr, kSklBaseline, kSklOptimized, kEsBaseline, kEsOptimized };

const char* to_string(ConstructionKind kind);
ConstructionKind parse_construction_kind(const std::string& name);

/// Parameters of one generator call. Only the fields relevant to `kind` are
/// meaningful; the named constructors enforce their ranges.
struct ConstructionParams {
  ConstructionKind kind = ConstructionKind::kPr;
  int r = 0;
  int k = 0;
  int l = 0;
  int t = 0;
  bool unit_separation = true;

  static ConstructionParams pr(int r);
  static ConstructionParams skl_baseline(int k, int l);
  static ConstructionParams skl_optimized(int k, int l, bool unit_separation = true);
  static ConstructionParams es_baseline(int t);
  static ConstructionParams es_optimized(int t, bool unit_separation = true);

  bool is_skl() const;
  bool is_es() const;
  bool is_optimized() const;

  /// Number of points the construction produces.
  BigInt expected_size() const;

  /// e.g. "ES_OPTIMIZED t=6".
  std::string label() const;

  friend bool operator==(const ConstructionParams&, const ConstructionParams&) = default;
};

/// Half-open index range [begin, end) of one translated block inside a
/// composed set.
struct BlockSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::string label;

  friend bool operator==(const BlockSpan&, const BlockSpan&) = default;
};

class PointSet {
 public:
  PointSet() = default;

  /// Throws kDuplicatePoint if two points coincide.
  explicit PointSet(std::vector<Point> points,
                    std::optional<ConstructionParams> params = std::nullopt,
                    std::vector<BlockSpan> spans = {});

  std::span<const Point> points() const { return points_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }

  const std::optional<ConstructionParams>& params() const { return params_; }
  const std::vector<BlockSpan>& spans() const { return spans_; }

  /// Same points in the same order, without provenance.
  PointSet without_metadata() const;

  /// Coordinates only; metadata is ignored.
  bool same_points(const PointSet& other) const { return points_ == other.points_; }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<Point> points_;
  std::optional<ConstructionParams> params_;
  std::vector<BlockSpan> spans_;
};

/// Width and height of the axis-aligned bounding box. Throws kEmptySet.
GridBounds bounding_box(const PointSet& s);

/// Translates s so that min x = min y = 0, keeping order and metadata.
PointSet normalize(const PointSet& s);

/// Translates by `offset`, keeping order and metadata.
PointSet translate(const PointSet& s, const Point& offset);

}  // namespace esgrid
