#include "surfpen/cli/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "surfpen/config.hpp"
#include "surfpen/error.hpp"
#include "surfpen/export.hpp"

namespace surfpen::cli {

namespace {

std::string sci(double v) {
  std::ostringstream o;
  o << std::scientific << std::setprecision(3) << v;
  return o.str();
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void print_report(const Evaluation& ev, const ConditionTolerances& tol, std::ostream& out) {
  const auto& c = ev.diagnostics.conditions;
  const auto& kn = ev.diagnostics.normal_curvature;
  out << "surface        " << ev.name;
  if (!ev.description.empty()) out << "  (" << ev.description << ")";
  out << '\n';
  out << "isoparametric  " << yes_no(c.isoparametric) << "  max residual " << sci(c.iso_residual) << " (tol "
      << sci(tol.isoparametric) << ")\n";
  out << "asymptotic     " << yes_no(c.asymptotic) << "  max residual " << sci(c.asym_residual) << " (tol "
      << sci(tol.asymptotic) << ")";
  if (c.vacuous_probes > 0) out << "  [vacuous at " << c.vacuous_probes << " probes, curvature vanishes]";
  out << '\n';
  out << "rmf            " << yes_no(c.rmf_ok) << "  residual " << sci(c.rmf_residual) << " (tol " << sci(tol.rmf)
      << ")\n";
  out << "theta' = -tau  " << yes_no(c.theta_ok) << "  residual " << sci(c.theta_rate_residual) << '\n';
  out << "normal curv.   max |k_n| " << sci(kn.max_abs) << " (tol " << sci(kNormalCurvatureTolerance) << ")\n";
  out << "degenerate     " << c.degenerate_probes << " of " << c.probes.size() << " probes\n";
  if (const auto& cls = ev.diagnostics.classification) {
    out << "ruled          planar_curve " << yes_no(cls->planar_curve) << ", developable " << yes_no(cls->developable)
        << ", plane " << yes_no(cls->plane) << "  (max |det| " << sci(cls->max_determinant) << ")\n";
  }
}

std::string default_path(const RunConfig& config, const char* extension) {
  if (config.subcommand == "example") return config.target + extension;
  return std::filesystem::path(config.target).filename().replace_extension(extension).string();
}

int finish(const Evaluation& ev, const SurfacePatch& patch, const RunConfig& config, std::ostream& out,
           std::ostream& err) {
  print_report(ev, config.tolerances, out);

  const bool write_mesh = config.subcommand != "check";
  if (write_mesh) {
    const std::string obj = config.obj_path.value_or(default_path(config, ".obj"));
    export_obj(patch, obj);
    const long faces = static_cast<long>(patch.grid().ns - 1) * (patch.grid().nt - 1);
    out << "wrote          " << obj << " (" << patch.grid().ns * patch.grid().nt << " vertices, " << faces
        << " faces)\n";
  }
  if (write_mesh || config.csv_path) {
    const std::string csv = config.csv_path.value_or(default_path(config, ".csv"));
    export_csv(ev.diagnostics.rows, csv);
    out << "wrote          " << csv << " (" << ev.diagnostics.rows.size() << " rows)\n";
  }

  if (!ev.passed()) {
    err << "check failed: " << ev.failures.front() << '\n';
    return kCheckFailed;
  }
  out << "result         all checks passed\n";
  return kOk;
}

}  // namespace

Evaluation evaluate(const std::string& name, const std::string& description, const SurfacePatch& patch,
                    const RuledPatch* ruled, const ConditionTolerances& tol) {
  Evaluation ev;
  ev.name = name;
  ev.description = description;
  ev.diagnostics = diagnose(patch, ruled, tol);

  const auto& c = ev.diagnostics.conditions;
  const auto& kn = ev.diagnostics.normal_curvature;
  if (!c.isoparametric) ev.failures.push_back("isoparametric condition (a = b = c = 0 at t0)");
  if (!c.asymptotic) ev.failures.push_back("asymptotic condition (kappa cos(theta) c_t + kappa sin(theta) b_t = 0)");
  if (!c.rmf_ok) ev.failures.push_back("rotation-minimizing frame residual");
  if (!c.theta_ok) ev.failures.push_back("theta' = -tau");
  if (kn.max_abs > kNormalCurvatureTolerance) ev.failures.push_back("normal curvature along the curve");
  if (c.degenerate_probes > kMaxDegenerateProbes || kn.degenerate > kMaxDegenerateProbes) {
    ev.failures.push_back("surface regularity along the curve (degenerate normal)");
  }
  return ev;
}

Evaluation run_example(const fixtures::Example& example, const ConditionTolerances& tol) {
  return evaluate(example.name, example.description, example.patch(), example.ruled(), tol);
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.frame_n < 2) throw ConfigError("--frame-n must be at least 2");
    if (config.subcommand == "example") {
      GridSize grid;
      grid.ns = config.ns.value_or(grid.ns);
      grid.nt = config.nt.value_or(grid.nt);
      if (grid.ns < 2 || grid.nt < 2) throw ConfigError("--ns and --nt must be at least 2");
      fixtures::Example example = [&] {
        try {
          return fixtures::build_example(config.target, config.frame_n, grid);
        } catch (const std::invalid_argument& e) {
          throw ConfigError(e.what());
        }
      }();
      const Evaluation ev = run_example(example, config.tolerances);
      return finish(ev, example.patch(), config, out, err);
    }

    const KeyValueFile file = KeyValueFile::load(config.target);
    LoadOptions options;
    options.frame_n = config.frame_n;
    options.ns = config.ns;
    options.nt = config.nt;
    options.curve_probes = config.curve_probes;
    const std::string name = std::filesystem::path(config.target).stem().string();

    if (config.subcommand == "ruled") {
      const RuledPatch ruled = load_ruled(file, options);
      const Evaluation ev = evaluate(name, "ruled, g = " + ruled.g().to_string(), ruled.patch(), &ruled,
                                     config.tolerances);
      return finish(ev, ruled.patch(), config, out, err);
    }
    if (config.subcommand == "build" || config.subcommand == "check") {
      if (file.contains("g")) {
        const RuledPatch ruled = load_ruled(file, options);
        const Evaluation ev = evaluate(name, "ruled, g = " + ruled.g().to_string(), ruled.patch(), &ruled,
                                       config.tolerances);
        return finish(ev, ruled.patch(), config, out, err);
      }
      const SurfacePatch patch = load_patch(file, options);
      const Evaluation ev = evaluate(name, {}, patch, nullptr, config.tolerances);
      return finish(ev, patch, config, out, err);
    }
    throw ConfigError("unknown subcommand '" + config.subcommand + "'");
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Surface pencils through a common asymptotic curve"};
  app.require_subcommand(1);

  RunConfig config;
  std::string out_path;
  std::string report_path;
  int ns = 0;
  int nt = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "OBJ mesh path");
    cmd->add_option("--report", report_path, "diagnostics CSV path");
    cmd->add_option("--ns", ns, "grid nodes along s")->check(CLI::PositiveNumber);
    cmd->add_option("--nt", nt, "grid nodes along t")->check(CLI::PositiveNumber);
    cmd->add_option("--frame-n", config.frame_n, "frame grid intervals")->capture_default_str();
    cmd->add_option("--probes", config.curve_probes, "unit-speed validation probes")->capture_default_str();
    cmd->add_option("--tol-asym", config.tolerances.asymptotic, "asymptotic residual tolerance")
        ->capture_default_str();
    cmd->add_option("--tol-iso", config.tolerances.isoparametric, "isoparametric residual tolerance")
        ->capture_default_str();
  };

  auto* example = app.add_subcommand("example", "build and check a reference surface p1..p6");
  example->add_option("name", config.target, "p1, p2, p3, p4, p5 or p6")->required();
  add_common(example);

  auto* build = app.add_subcommand("build", "build a pencil member from a definition file");
  build->add_option("config", config.target, "definition file")->required();
  add_common(build);

  auto* ruled = app.add_subcommand("ruled", "build a ruled pencil member from a definition file");
  ruled->add_option("config", config.target, "definition file")->required();
  add_common(ruled);

  auto* check = app.add_subcommand("check", "report conditions only, no mesh");
  check->add_option("config", config.target, "definition file")->required();
  add_common(check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }

  config.subcommand = app.get_subcommands().front()->get_name();
  if (!out_path.empty()) config.obj_path = out_path;
  if (!report_path.empty()) config.csv_path = report_path;
  if (ns > 0) config.ns = ns;
  if (nt > 0) config.nt = nt;
  return run(config, out, err);
}

}  // namespace surfpen::cli
