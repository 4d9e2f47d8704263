#include "esgrid/cli.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "esgrid/constructions.hpp"
#include "esgrid/io.hpp"
#include "esgrid/verification.hpp"

namespace esgrid {

namespace {

// Failure to read or parse an input file; reported like a usage error.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& bytes, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << bytes;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << bytes)) throw InputError("cannot write '" + path + "'");
}

PointSet load(const std::string& path) {
  const std::string bytes = read_file(path);
  try {
    return deserialize(bytes, sniff_format(bytes));
  } catch (const Error& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s + "]";
}

void print_report(const PointSet& s, const VerificationReport& r, std::ostream& out) {
  if (s.params()) out << "construction: " << s.params()->label() << "\n";
  out << "points: " << r.n << "\n";
  out << "bounds: " << r.bounds.width << " x " << r.bounds.height << "\n";
  out << "general position: " << (r.general_position ? "yes" : "no");
  if (r.collinear_witness) {
    const auto& w = *r.collinear_witness;
    out << " (collinear " << w[0] << " " << w[1] << " " << w[2] << ")";
  }
  out << "\n";
  auto line = [&](const char* name, const std::optional<Witnessed>& w, const char* unset) {
    out << name << ": ";
    if (w) {
      out << w->size << " " << join(w->witness) << "\n";
    } else {
      out << unset << "\n";
    }
  };
  line("max cup", r.max_cup, "n/a (repeated x)");
  line("max cap", r.max_cap, "n/a (repeated x)");
  line("max convex", r.max_convex, "n/a (not in general position)");
  if (r.max_empty_convex) line("max empty convex", r.max_empty_convex, "");
  if (r.brute_force_convex) out << "brute force convex: " << *r.brute_force_convex << "\n";
}

ConstructionParams gen_params(const std::string& kind, std::optional<int> r, std::optional<int> k,
                              std::optional<int> l, std::optional<int> t, bool unit) {
  auto need = [&](const std::optional<int>& v, const char* flag) {
    if (!v) throw CLI::ValidationError(std::string("--kind ") + kind + " requires " + flag);
    return *v;
  };
  try {
    if (kind == "pr") return ConstructionParams::pr(need(r, "--r"));
    if (kind == "skl") return ConstructionParams::skl_baseline(need(k, "--k"), need(l, "--l"));
    if (kind == "skl-opt") {
      return ConstructionParams::skl_optimized(need(k, "--k"), need(l, "--l"), unit);
    }
    if (kind == "es") return ConstructionParams::es_baseline(need(t, "--t"));
    return ConstructionParams::es_optimized(need(t, "--t"), unit);
  } catch (const Error& e) {
    throw CLI::ValidationError(e.what());
  }
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generate, verify and draw point sets without large convex polygons"};
  app.name("esgrid");
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Generate a construction");
  std::string kind;
  std::optional<int> opt_r, opt_k, opt_l, opt_t;
  bool no_unit_sep = false;
  std::string format = "txt";
  std::string gen_out;
  gen->add_option("--kind", kind, "Construction")
      ->required()
      ->check(CLI::IsMember({"pr", "skl", "skl-opt", "es", "es-opt"}));
  gen->add_option("--r", opt_r, "Level of P_r");
  gen->add_option("--k", opt_k, "Forbidden cup length");
  gen->add_option("--l", opt_l, "Forbidden cap length");
  gen->add_option("--t", opt_t, "Forbidden convex polygon size");
  gen->add_flag("--no-unit-sep", no_unit_sep, "Keep the wide gap at the outermost step");
  gen->add_option("--format", format, "Output format")->check(CLI::IsMember({"txt", "json"}));
  gen->add_option("--out", gen_out, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Recompute all properties of a point file");
  std::string verify_in;
  bool with_empty = false, with_oracle = false, verify_json = false;
  unsigned threads = 1;
  verify->add_option("file", verify_in, "TEXT or JSON point file")->required();
  verify->add_flag("--empty", with_empty, "Also find the largest empty convex polygon");
  verify->add_flag("--oracle", with_oracle, "Cross-check with subset enumeration (n <= 20)");
  verify->add_option("--threads", threads, "Worker threads, 0 = all cores");
  verify->add_flag("--json", verify_json, "Print a JSON document with the report");

  auto* render = app.add_subcommand("render", "Draw a point file as SVG");
  std::string render_in, render_out;
  SvgOptions svg;
  render->add_option("file", render_in, "TEXT or JSON point file")->required();
  render->add_option("--out", render_out, "SVG file")->required();
  render->add_flag("--hull", svg.show_hull, "Draw the convex hull");
  render->add_flag("--blocks", svg.show_blocks, "Color points by block");
  render->add_option("--width", svg.canvas_width_px, "Canvas width in pixels")
      ->check(CLI::PositiveNumber);
  render->add_option("--radius", svg.point_radius_px, "Point radius in pixels")
      ->check(CLI::PositiveNumber);

  auto* stats = app.add_subcommand("stats", "Print size and grid statistics");
  std::string stats_in;
  stats->add_option("file", stats_in, "TEXT or JSON point file")->required();

  try {
    app.parse(argc, argv);

    if (*gen) {
      const auto params = gen_params(kind, opt_r, opt_k, opt_l, opt_t, !no_unit_sep);
      const PointSet s = build(params);
      write_output(gen_out, serialize(s, parse_format(format)), out);
      return kExitOk;
    }

    if (*verify) {
      const PointSet s = load(verify_in);
      ReportOptions options;
      options.include_empty = with_empty;
      options.include_oracle = with_oracle;
      options.verify.threads = threads;
      const VerificationReport report = full_report(s, options);
      if (verify_json) {
        out << serialize(s, Format::kJson, &report);
      } else {
        print_report(s, report, out);
      }
      const auto failures = claim_failures(s, report);
      for (const auto& f : failures) err << "FAIL: " << f << "\n";
      return failures.empty() ? kExitOk : kExitVerificationFailed;
    }

    if (*render) {
      const PointSet s = load(render_in);
      write_output(render_out, render_svg(s, svg), out);
      return kExitOk;
    }

    if (*stats) {
      const PointSet s = load(stats_in);
      const GridBounds b = bounding_box(s);
      if (s.params()) out << "construction: " << s.params()->label() << "\n";
      out << "points: " << s.size() << "\n";
      out << "bounds: " << b.width << " x " << b.height << "\n";
      if (s.params() && s.params()->is_es()) {
        out << "baseline bound 3t^2(t+1)4^(t+1): " << es_baseline_bound(s.params()->t) << "\n";
      }
      if (!s.spans().empty()) {
        out << "blocks:";
        for (const auto& span : s.spans()) out << " " << span.label << "=" << span.end - span.begin;
        out << "\n";
      }
      return kExitOk;
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run 'esgrid --help' for usage\n";
    return kExitUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kNotGeneralPosition ? kExitVerificationFailed : kExitUsage;
  }
  return kExitUsage;
}

int cli_main(int argc, const char* const* argv) { return cli_main(argc, argv, std::cout, std::cerr); }

}  // namespace esgrid
