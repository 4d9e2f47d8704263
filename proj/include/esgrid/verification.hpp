#pragma once
/**
 * Exact verifiers for the combinatorial properties of a point set:
 * general position, longest cups and caps, largest subset in convex
 * position, largest empty convex polygon, and the "high above" relation
 * between two sets. Every search returns a witness alongside its value.
 *
 * Internally each search runs on 64-bit coordinates with 128-bit
 * intermediates whenever every |coordinate| < 2^61, and on BigInt otherwise;
 * the answer is identical either way.
 */

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "esgrid/arith.hpp"
#include "esgrid/point_set.hpp"

namespace esgrid {

struct VerifyOptions {
  /// Worker threads for the per-anchor searches; 0 means hardware concurrency.
  unsigned threads = 1;
};

struct GeneralPositionResult {
  bool ok = true;
  /// Indices of a collinear triple when !ok.
  std::optional<std::array<std::size_t, 3>> witness;
};

/// A value together with the indices (into the input set) realizing it.
struct Witnessed {
  int size = 0;
  std::vector<std::size_t> witness;
};

struct HighAboveViolation {
  /// True when the offending line passes through two points of the upper set.
  bool line_from_upper = false;
  Point line_p;
  Point line_q;
  Point point;
};

struct HighAboveResult {
  bool ok = true;
  std::optional<HighAboveViolation> witness;
};

GeneralPositionResult check_general_position(const PointSet& s);

/// Longest left-to-right chain whose consecutive triples all turn left.
/// Witness is ordered by x. Throws kDuplicateX.
Witnessed max_cup(const PointSet& s);

/// Mirror of max_cup with right turns.
Witnessed max_cap(const PointSet& s);

/// Largest subset in convex position; witness in counter-clockwise order.
/// Throws kNotGeneralPosition.
Witnessed max_convex_subset(const PointSet& s, const VerifyOptions& options = {});

/// Largest convex polygon with no point of s strictly inside.
/// Throws kNotGeneralPosition.
Witnessed max_empty_convex_subset(const PointSet& s, const VerifyOptions& options = {});

/// Every line through two points of `upper` passes strictly above every
/// point of `lower`, and every line through two points of `lower` passes
/// strictly below every point of `upper`. Throws kEmptySet.
HighAboveResult is_high_above(std::span<const Point> upper, std::span<const Point> lower);
HighAboveResult is_high_above(const PointSet& upper, const PointSet& lower);

/// Subset enumeration oracle for max_convex_subset. Throws kTooLarge for
/// more than kBruteForceLimit points and kNotGeneralPosition.
inline constexpr std::size_t kBruteForceLimit = 20;
int brute_force_max_convex(const PointSet& s);

/// Indices of the convex hull vertices, counter-clockwise from the
/// lexicographically smallest point. Collinear boundary points are dropped.
std::vector<std::size_t> convex_hull(const PointSet& s);

/// Independent re-checks used to validate witnesses.
bool is_cup(const PointSet& s, const std::vector<std::size_t>& chain);
bool is_cap(const PointSet& s, const std::vector<std::size_t>& chain);
bool is_convex_polygon(const PointSet& s, const std::vector<std::size_t>& polygon);
bool is_empty_polygon(const PointSet& s, const std::vector<std::size_t>& polygon);

struct VerificationReport {
  std::size_t n = 0;
  GridBounds bounds;
  bool general_position = true;
  std::optional<std::array<std::size_t, 3>> collinear_witness;
  // Unset when x-coordinates repeat.
  std::optional<Witnessed> max_cup;
  std::optional<Witnessed> max_cap;
  // Unset when the set is not in general position.
  std::optional<Witnessed> max_convex;
  std::optional<Witnessed> max_empty_convex;
  std::optional<int> brute_force_convex;
};

struct ReportOptions {
  bool include_empty = false;
  bool include_oracle = false;
  VerifyOptions verify;
};

/// Runs every verifier and re-checks each witness before returning.
VerificationReport full_report(const PointSet& s, const ReportOptions& options = {});

/// One line per property that `s.params()` promises but the report refutes.
/// Empty when everything holds (or when s carries no params and is in
/// general position).
std::vector<std::string> claim_failures(const PointSet& s, const VerificationReport& report);

}  // namespace esgrid
