#include "esgrid/io.hpp"

#include "json.hpp"

#include <sstream>
#include <utility>

namespace esgrid {

using nlohmann::json;

Format parse_format(const std::string& name) {
  if (name == "txt" || name == "text") return Format::kText;
  if (name == "json") return Format::kJson;
  throw Error(ErrorCode::kInvalidArgument, "unknown format '" + name + "'");
}

Format sniff_format(const std::string& bytes) {
  for (char c : bytes) {
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
    return c == '{' ? Format::kJson : Format::kText;
  }
  return Format::kText;
}

namespace {

json indices(const std::vector<std::size_t>& v) { return json(v); }

json witnessed(const Witnessed& w) { return {{"size", w.size}, {"witness", indices(w.witness)}}; }

json report_json(const VerificationReport& r) {
  json j;
  j["n"] = r.n;
  j["bounds"] = {r.bounds.width.str(), r.bounds.height.str()};
  j["general_position"] = r.general_position;
  if (r.collinear_witness) j["collinear_witness"] = *r.collinear_witness;
  if (r.max_cup) j["max_cup"] = witnessed(*r.max_cup);
  if (r.max_cap) j["max_cap"] = witnessed(*r.max_cap);
  if (r.max_convex) j["max_convex"] = witnessed(*r.max_convex);
  if (r.max_empty_convex) j["max_empty_convex"] = witnessed(*r.max_empty_convex);
  if (r.brute_force_convex) j["brute_force_convex"] = *r.brute_force_convex;
  return j;
}

json construction_json(const ConstructionParams& p) {
  json j;
  j["kind"] = to_string(p.kind);
  j["label"] = p.label();
  switch (p.kind) {
    case ConstructionKind::kPr: j["r"] = p.r; break;
    case ConstructionKind::kSklBaseline:
    case ConstructionKind::kSklOptimized:
      j["k"] = p.k;
      j["l"] = p.l;
      break;
    case ConstructionKind::kEsBaseline:
    case ConstructionKind::kEsOptimized: j["t"] = p.t; break;
  }
  if (p.is_optimized()) j["unit_separation"] = p.unit_separation;
  return j;
}

std::string serialize_text(const PointSet& s) {
  std::string out;
  for (const auto& p : s.points()) {
    out += p.x.str();
    out += ' ';
    out += p.y.str();
    out += '\n';
  }
  return out;
}

std::string serialize_json(const PointSet& s, const VerificationReport* report) {
  json doc;
  doc["format_version"] = kFormatVersion;
  if (s.params()) doc["construction"] = construction_json(*s.params());
  json pts = json::array();
  for (const auto& p : s.points()) pts.push_back({p.x.str(), p.y.str()});
  doc["points"] = std::move(pts);
  if (!s.spans().empty()) {
    json blocks = json::array();
    for (const auto& b : s.spans()) {
      blocks.push_back({{"begin", b.begin}, {"end", b.end}, {"label", b.label}});
    }
    doc["blocks"] = std::move(blocks);
  }
  if (report) doc["report"] = report_json(*report);
  return doc.dump(2) + "\n";
}

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::kParseError, what); }

PointSet deserialize_text(const std::string& bytes) {
  std::vector<Point> pts;
  std::istringstream in(bytes);
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::istringstream fields(line);
    std::string xs, ys, extra;
    fields >> xs >> ys;
    if (ys.empty() || (fields >> extra)) {
      parse_error("line " + std::to_string(lineno) + ": expected two integers");
    }
    try {
      pts.push_back({parse_bigint(xs), parse_bigint(ys)});
    } catch (const Error& e) {
      parse_error("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return PointSet(std::move(pts));
}

BigInt coordinate(const json& v, std::size_t index) {
  if (v.is_string()) {
    try {
      return parse_bigint(v.get<std::string>());
    } catch (const Error& e) {
      parse_error("points[" + std::to_string(index) + "]: " + e.what());
    }
  }
  if (v.is_number_integer()) return BigInt(v.dump());
  parse_error("points[" + std::to_string(index) + "]: coordinate must be a decimal string");
}

int int_field(const json& j, const char* name) {
  if (!j.contains(name) || !j[name].is_number_integer()) {
    parse_error(std::string("construction.") + name + " must be an integer");
  }
  return j[name].get<int>();
}

ConstructionParams params_from_json(const json& c) {
  if (!c.is_object() || !c.contains("kind") || !c["kind"].is_string()) {
    parse_error("construction.kind must be a string");
  }
  const ConstructionKind kind = parse_construction_kind(c["kind"].get<std::string>());
  bool unit = true;
  if (c.contains("unit_separation")) {
    if (!c["unit_separation"].is_boolean()) parse_error("construction.unit_separation must be a boolean");
    unit = c["unit_separation"].get<bool>();
  }
  try {
    switch (kind) {
      case ConstructionKind::kPr: return ConstructionParams::pr(int_field(c, "r"));
      case ConstructionKind::kSklBaseline:
        return ConstructionParams::skl_baseline(int_field(c, "k"), int_field(c, "l"));
      case ConstructionKind::kSklOptimized:
        return ConstructionParams::skl_optimized(int_field(c, "k"), int_field(c, "l"), unit);
      case ConstructionKind::kEsBaseline: return ConstructionParams::es_baseline(int_field(c, "t"));
      case ConstructionKind::kEsOptimized:
        return ConstructionParams::es_optimized(int_field(c, "t"), unit);
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParseError) throw;
    parse_error(std::string("construction: ") + e.what());
  }
  parse_error("construction: unknown kind");
}

PointSet deserialize_json(const std::string& bytes) {
  json doc;
  try {
    doc = json::parse(bytes);
  } catch (const json::parse_error& e) {
    parse_error("byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) parse_error("document must be an object");
  if (!doc.contains("format_version") || doc["format_version"] != kFormatVersion) {
    parse_error("unsupported format_version");
  }
  if (!doc.contains("points") || !doc["points"].is_array()) parse_error("points must be an array");

  std::vector<Point> pts;
  const json& arr = doc["points"];
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_array() || arr[i].size() != 2) {
      parse_error("points[" + std::to_string(i) + "] must be a pair");
    }
    pts.push_back({coordinate(arr[i][0], i), coordinate(arr[i][1], i)});
  }

  std::optional<ConstructionParams> params;
  if (doc.contains("construction") && !doc["construction"].is_null()) {
    params = params_from_json(doc["construction"]);
  }

  std::vector<BlockSpan> spans;
  if (doc.contains("blocks")) {
    if (!doc["blocks"].is_array()) parse_error("blocks must be an array");
    for (const auto& b : doc["blocks"]) {
      if (!b.is_object() || !b.contains("begin") || !b.contains("end") ||
          !b["begin"].is_number_unsigned() || !b["end"].is_number_unsigned()) {
        parse_error("each block needs unsigned begin and end");
      }
      spans.push_back({b["begin"].get<std::size_t>(), b["end"].get<std::size_t>(),
                       b.value("label", std::string())});
    }
  }

  try {
    return PointSet(std::move(pts), params, std::move(spans));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kInvalidArgument) throw;
    parse_error(std::string("blocks: ") + e.what());
  }
}

}  // namespace

std::string serialize(const PointSet& s, Format format, const VerificationReport* report) {
  if (s.empty()) throw Error(ErrorCode::kEmptySet, "cannot serialize an empty set");
  return format == Format::kText ? serialize_text(s) : serialize_json(s, report);
}

PointSet deserialize(const std::string& bytes, Format format) {
  return format == Format::kText ? deserialize_text(bytes) : deserialize_json(bytes);
}

}  // namespace esgrid
