#include "surfpen/config.hpp"

#include <string>

#include "surfpen/error.hpp"

namespace surfpen {

namespace {

Expr expr_or(const KeyValueFile& file, std::string_view key, std::string_view fallback) {
  const auto* entry = file.find(key);
  try {
    return parse(entry ? std::string_view(entry->value) : fallback);
  } catch (const ParseError& e) {
    throw ConfigError(std::string(key) + ": " + e.what(), entry ? entry->line : 0);
  }
}

struct Common {
  FrameField frame;
  double t0;
  Interval t_range;
  GridSize grid;
};

Common load_common(const KeyValueFile& file, const LoadOptions& options) {
  const Curve curve = load_curve(file);
  const SpeedReport speed = check_unit_speed(curve, options.curve_probes);
  if (!speed.ok) {
    throw ConfigError("curve is not unit speed (max ||r'| - 1| = " + std::to_string(speed.max_speed_error) + ")");
  }
  const double theta0 = file.number("theta0").value_or(0.0);
  GridSize grid;
  grid.ns = options.ns.value_or(file.integer("ns").value_or(grid.ns));
  grid.nt = options.nt.value_or(file.integer("nt").value_or(grid.nt));
  if (grid.ns < 2 || grid.nt < 2) throw ConfigError("ns and nt must be at least 2");
  return {rmf_by_theta(curve, theta0, options.frame_n), file.required_number("t0"),
          Interval{file.required_number("t_min"), file.required_number("t_max")}, grid};
}

}  // namespace

SurfacePatch load_patch(const KeyValueFile& file, const LoadOptions& options) {
  try {
    Common c = load_common(file, options);
    if (file.contains("g")) throw ConfigError("'g' belongs to ruled definitions", file.find("g")->line);
    if (file.contains("f")) {
      if (file.contains("b") || file.contains("c")) {
        throw ConfigError("give either 'f' or 'b'/'c', not both", file.find("f")->line);
      }
      const MarchingScale scale =
          build_sufficient(expr_or(file, "f", "0"), expr_or(file, "a", "0"), c.frame, c.t0, c.t_range);
      return SurfacePatch(c.frame, scale, c.grid);
    }
    MarchingScale scale(expr_or(file, "a", "0"), expr_or(file, "b", "0"), expr_or(file, "c", "0"), c.t0, c.t_range);
    return SurfacePatch(c.frame, scale, c.grid);
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
}

RuledPatch load_ruled(const KeyValueFile& file, const LoadOptions& options) {
  try {
    Common c = load_common(file, options);
    for (const char* key : {"a", "b", "c", "f"}) {
      if (file.contains(key)) throw ConfigError(std::string("'") + key + "' is not used by ruled definitions", file.find(key)->line);
    }
    return build_ruled(c.frame, expr_or(file, "g", "0"), c.t0, c.frame.curve().domain(), c.t_range, c.grid);
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
}

}  // namespace surfpen
