#pragma once
// Point-set serialization and SVG rendering.
//
// TEXT is one "x y" pair per line with no header, so files from other tools
// load directly. JSON keeps the construction parameters and block spans and
// stores coordinates as decimal strings, so nothing is lost to doubles.

#include <optional>
#include <string>

#include "esgrid/point_set.hpp"
#include "esgrid/verification.hpp"

namespace esgrid {

enum class Format { kText, kJson };

Format parse_format(const std::string& name);

inline constexpr int kFormatVersion = 1;

/// Throws kEmptySet. `report`, when given, is embedded in JSON and ignored
/// for TEXT.
std::string serialize(const PointSet& s, Format format,
                      const VerificationReport* report = nullptr);

/// Throws kParseError (message names the line or byte offset) and
/// kDuplicatePoint. Any embedded report is ignored.
PointSet deserialize(const std::string& bytes, Format format);

/// JSON if the first non-blank byte is '{', TEXT otherwise.
Format sniff_format(const std::string& bytes);

struct SvgOptions {
  int canvas_width_px = 800;
  double point_radius_px = 4.0;
  bool show_hull = false;
  bool show_blocks = false;
};

/// Throws kEmptySet.
std::string render_svg(const PointSet& s, const SvgOptions& options = {});

}  // namespace esgrid
