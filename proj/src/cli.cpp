#include "harmcurv/cli.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "harmcurv/critical.hpp"
#include "harmcurv/equivalence.hpp"
#include "harmcurv/errors.hpp"
#include "harmcurv/io.hpp"
#include "harmcurv/svg.hpp"
#include "harmcurv/topology.hpp"

namespace harmcurv::cli {

namespace {

const std::map<std::string, Command> kCommands{
    {"roots", Command::Roots},   {"curvature", Command::Curvature}, {"critical", Command::Critical},
    {"fibers", Command::Fibers}, {"equiv", Command::Equiv},         {"loop", Command::Loop}};

const std::map<std::string, Format> kFormats{
    {"csv", Format::Csv}, {"json", Format::Json}, {"svg", Format::Svg}};

const std::map<std::string, Part> kParts{{"real", Part::Real}, {"imag", Part::Imag}};

std::string error_line(const std::string& kind, const std::string& message) {
  return io::json{{"error", kind}, {"message", message}}.dump() + "\n";
}

std::string dump(const io::json& doc) { return doc.dump(2) + "\n"; }

std::vector<Complex> locations(const std::vector<CriticalPoint>& cps) {
  std::vector<Complex> out;
  for (const CriticalPoint& cp : cps) out.push_back(cp.location);
  return out;
}

std::string unsupported(const char* command) {
  throw UsageError(std::string("svg output is not available for '") + command + "'");
}

std::string run_roots(const ComplexPoly& p, const RunConfig& cfg) {
  const RootSet rs = roots(p, cfg.tolerances);
  switch (cfg.format) {
    case Format::Csv:
      return io::roots_csv(rs);
    case Format::Json:
      return dump(io::roots_json(p, rs));
    case Format::Svg:
      break;
  }
  return unsupported("roots");
}

Domain2D domain_for(const ComplexPoly& p, const RunConfig& cfg) {
  return cfg.domain ? *cfg.domain : default_domain(p, cfg.tolerances);
}

std::string run_curvature(const ComplexPoly& p, const RunConfig& cfg) {
  const CurvatureGrid grid =
      curvature_grid(p, domain_for(p, cfg), cfg.grid_n, cfg.grid_n, cfg.tolerances);
  switch (cfg.format) {
    case Format::Csv:
      return io::grid_csv(grid);
    case Format::Json:
      return dump(io::grid_json(grid));
    case Format::Svg:
      break;
  }
  svg::Scene scene;
  scene.marks = locations(critical_points(p, cfg.tolerances));
  return svg::render(grid, scene);
}

std::string run_critical(const ComplexPoly& p, const RunConfig& cfg) {
  const std::vector<CriticalPoint> cps = critical_points(p, cfg.tolerances);
  switch (cfg.format) {
    case Format::Csv:
      return io::critical_csv(cps);
    case Format::Json:
      return dump(io::critical_report_json(p, cps, cfg.tolerances));
    case Format::Svg:
      break;
  }
  const CurvatureGrid grid =
      curvature_grid(p, domain_for(p, cfg), cfg.grid_n, cfg.grid_n, cfg.tolerances);
  svg::Scene scene;
  scene.marks = locations(cps);
  for (const Root& r : flat_points(p, cfg.tolerances).points.roots) scene.marks.push_back(r.location);
  return svg::render(grid, scene);
}

std::string run_fibers(const ComplexPoly& p, const RunConfig& cfg) {
  const Domain2D domain = domain_for(p, cfg);
  const std::vector<CriticalPoint> cps = critical_points(p, cfg.tolerances);
  const FiberSignature sig = fiber_signature(p, cfg.part, domain, cfg.grid_n, cfg.tolerances);
  switch (cfg.format) {
    case Format::Csv:
      return io::signature_csv(sig, cps);
    case Format::Json: {
      io::json doc = io::signature_json(sig, cps);
      doc["part"] = cfg.part == Part::Real ? "real" : "imag";
      return dump(doc);
    }
    case Format::Svg:
      break;
  }
  const CurvatureGrid grid = curvature_grid(p, domain, cfg.grid_n, cfg.grid_n, cfg.tolerances);
  const ComplexPoly g = part_poly(p, cfg.part);
  const LevelField field(g, domain, cfg.grid_n);
  svg::Scene scene;
  for (const LevelClass& cls : sig.level_partition) {
    scene.contours.push_back(svg::marching_squares(g, field, cls.value));
  }
  scene.marks = locations(cps);
  return svg::render(grid, scene);
}

std::string run_equiv(const ComplexPoly& p, const ComplexPoly& q, const RunConfig& cfg) {
  const EquivalenceVerdict v = decide_equal_curvature(p, q, cfg.tolerances);
  switch (cfg.format) {
    case Format::Csv:
      return io::verdict_csv(v);
    case Format::Json:
      return dump(io::verdict_json(v));
    case Format::Svg:
      break;
  }
  return unsupported("equiv");
}

std::string run_loop(const ComplexPoly& p, const RunConfig& cfg) {
  const std::vector<LoopSample> samples =
      loop_scan(p, cfg.t_samples, domain_for(p, cfg), cfg.grid_n, cfg.tolerances);
  switch (cfg.format) {
    case Format::Csv:
      return io::loop_csv(samples);
    case Format::Json:
      return dump(io::loop_json(samples));
    case Format::Svg:
      break;
  }
  return unsupported("loop");
}

void emit(const std::string& text, const RunConfig& cfg, std::ostream& out) {
  if (!cfg.out_path) {
    out << text;
    return;
  }
  std::ofstream file(*cfg.out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("cannot write output file " + *cfg.out_path);
  file << text;
  if (!file.flush()) throw UsageError("failed writing output file " + *cfg.out_path);
}

}  // namespace

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out) {
  CLI::App app{"Curvature and level-set analysis of harmonic polynomial graphs", "harmcurv"};
  RunConfig cfg;
  std::string command, format = "json", part = "real";
  std::vector<double> domain;
  std::string out_path;

  app.add_option("command", command, "roots|curvature|critical|fibers|equiv|loop")->required();
  app.add_option("inputs", cfg.inputs, "polynomial JSON file(s)")->required();
  app.add_option("--domain", domain, "xmin,xmax,ymin,ymax")->delimiter(',')->expected(4);
  app.add_option("--grid", cfg.grid_n, "grid resolution N (16..4096)");
  app.add_option("--part", part, "real|imag");
  app.add_option("--t-samples", cfg.t_samples, "loop samples");
  app.add_option("--format", format, "csv|json|svg");
  app.add_option("--out", out_path, "output path (default stdout)");
  app.add_option("--tol-root", cfg.tolerances.root, "root finder relative tolerance");
  app.add_option("--tol-match", cfg.tolerances.coefficient_match, "coefficient match tolerance");

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  const auto lookup = [](const auto& table, const std::string& key, const char* what) {
    const auto it = table.find(key);
    if (it == table.end()) throw UsageError(std::string("unknown ") + what + " '" + key + "'");
    return it->second;
  };
  cfg.command = lookup(kCommands, command, "command");
  cfg.format = lookup(kFormats, format, "format");
  cfg.part = lookup(kParts, part, "part");
  if (!domain.empty()) {
    if (domain.size() != 4) throw UsageError("--domain needs xmin,xmax,ymin,ymax");
    cfg.domain = Domain2D{domain[0], domain[1], domain[2], domain[3]};
  }
  if (!out_path.empty()) cfg.out_path = out_path;
  validate(cfg);
  return cfg;
}

void validate(const RunConfig& cfg) {
  if (cfg.grid_n < 16 || cfg.grid_n > 4096) throw UsageError("--grid must be in [16, 4096]");
  const std::size_t wanted = cfg.command == Command::Equiv ? 2 : 1;
  if (cfg.inputs.size() != wanted) {
    throw UsageError("expected " + std::to_string(wanted) + " input file(s), got " +
                     std::to_string(cfg.inputs.size()));
  }
  if (cfg.command == Command::Loop && cfg.t_samples < 4) throw UsageError("--t-samples must be >= 4");
  if (cfg.domain) {
    try {
      cfg.domain->validate();
    } catch (const InputError& e) {
      throw UsageError(e.what());
    }
  }
  if (!(cfg.tolerances.root > 0.0) || !(cfg.tolerances.coefficient_match > 0.0)) {
    throw UsageError("tolerances must be positive");
  }
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate(cfg);
    const ComplexPoly p = io::read_poly_file(cfg.inputs.at(0));
    std::string text;
    switch (cfg.command) {
      case Command::Roots:
        text = run_roots(p, cfg);
        break;
      case Command::Curvature:
        text = run_curvature(p, cfg);
        break;
      case Command::Critical:
        text = run_critical(p, cfg);
        break;
      case Command::Fibers:
        text = run_fibers(p, cfg);
        break;
      case Command::Equiv:
        text = run_equiv(p, io::read_poly_file(cfg.inputs.at(1)), cfg);
        break;
      case Command::Loop:
        text = run_loop(p, cfg);
        break;
    }
    emit(text, cfg, out);
    return kSuccess;
  } catch (const UsageError& e) {
    err << error_line("usage", e.what());
    return kUsageError;
  } catch (const InputError& e) {
    err << error_line("input", e.what());
    return kUsageError;
  } catch (const NumericError& e) {
    err << error_line("numeric", e.what());
    return kNumericFailure;
  }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::optional<RunConfig> cfg;
  try {
    cfg = parse_args(argc, argv, out);
  } catch (const UsageError& e) {
    err << error_line("usage", e.what());
    return kUsageError;
  }
  if (!cfg) return kSuccess;
  return run(*cfg, out, err);
}

}  // namespace harmcurv::cli
