#include <cstdio>
#include <string>
#include <vector>

#include "esgrid/io.hpp"

namespace esgrid {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                    "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const PointSet& s, const SvgOptions& options) {
  if (options.canvas_width_px <= 0 || options.point_radius_px <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "canvas width and point radius must be positive");
  }
  const GridBounds box = bounding_box(s);  // throws kEmptySet
  BigInt min_x = s[0].x, min_y = s[0].y;
  for (const auto& p : s.points()) {
    if (p.x < min_x) min_x = p.x;
    if (p.y < min_y) min_y = p.y;
  }

  // One scale for both axes keeps the drawn box proportional to the grid.
  const double margin = 2 * options.point_radius_px + 4;
  const double w = box.width.convert_to<double>();
  const double h = box.height.convert_to<double>();
  const double inner = options.canvas_width_px - 2 * margin;
  const double scale = inner > 0 ? inner / (w > 0 ? w : 1) : 1;
  const double width = w * scale + 2 * margin;
  const double height = h * scale + 2 * margin;

  std::vector<double> xs, ys;
  for (const auto& p : s.points()) {
    xs.push_back(margin + BigInt(p.x - min_x).convert_to<double>() * scale);
    // Larger y is drawn higher up.
    ys.push_back(height - margin - BigInt(p.y - min_y).convert_to<double>() * scale);
  }

  std::vector<int> color(s.size(), -1);
  if (options.show_blocks) {
    for (std::size_t b = 0; b < s.spans().size(); ++b) {
      for (std::size_t i = s.spans()[b].begin; i < s.spans()[b].end; ++i) {
        color[i] = static_cast<int>(b % std::size(kPalette));
      }
    }
  }

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(width) +
         "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
  if (s.params()) out += "<title>" + escape(s.params()->label()) + "</title>\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + num(width) + "\" height=\"" + num(height) +
         "\" fill=\"white\"/>\n";

  if (options.show_hull && s.size() >= 2) {
    const auto hull = convex_hull(s);
    out += "<polyline class=\"hull\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\" points=\"";
    for (std::size_t i = 0; i <= hull.size(); ++i) {
      const std::size_t v = hull[i % hull.size()];
      if (i > 0) out += ' ';
      out += num(xs[v]) + "," + num(ys[v]);
    }
    out += "\"/>\n";
  }

  if (options.show_blocks) {
    for (std::size_t b = 0; b < s.spans().size(); ++b) {
      out += "<!-- block " + std::to_string(b) + ": " + escape(s.spans()[b].label) + " -->\n";
    }
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char* fill = color[i] < 0 ? "black" : kPalette[color[i]];
    out += "<circle cx=\"" + num(xs[i]) + "\" cy=\"" + num(ys[i]) + "\" r=\"" +
           num(options.point_radius_px) + "\" fill=\"" + fill + "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace esgrid
