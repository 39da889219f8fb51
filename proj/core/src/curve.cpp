#include "surfpen/curve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "surfpen/error.hpp"
#include "surfpen/keyvalue.hpp"

namespace surfpen {

Curve::Curve(std::array<Expr, 3> coordinates, Interval domain) : domain_(domain) {
  if (!(domain.hi > domain.lo)) throw PreconditionViolated("curve interval must satisfy s_min < s_max");
  for (int axis = 0; axis < 3; ++axis) {
    if (coordinates[axis].depends_on(Var::t)) {
      throw PreconditionViolated("curve coordinate " + std::to_string(axis) + " depends on t");
    }
  }
  derivs_[0] = std::move(coordinates);
  for (int order = 1; order <= 3; ++order) {
    for (int axis = 0; axis < 3; ++axis) {
      derivs_[order][axis] = derivs_[order - 1][axis].derivative(Var::s);
    }
  }
}

Curve Curve::from_text(std::string_view x, std::string_view y, std::string_view z, Interval domain) {
  return Curve({parse(x), parse(y), parse(z)}, domain);
}

Vec3 Curve::derivative(double s, int order) const {
  const auto& d = derivs_.at(static_cast<std::size_t>(order));
  return {d[0].eval(s, 0.0), d[1].eval(s, 0.0), d[2].eval(s, 0.0)};
}

Curve load_curve(const KeyValueFile& file) {
  auto expr_of = [&](std::string_view key) {
    const auto& entry = file.at(key);
    try {
      return parse(entry.value);
    } catch (const ParseError& e) {
      throw ConfigError(std::string(key) + ": " + e.what(), entry.line);
    }
  };
  const Interval domain{file.required_number("s_min"), file.required_number("s_max")};
  try {
    return Curve({expr_of("x"), expr_of("y"), expr_of("z")}, domain);
  } catch (const PreconditionViolated& e) {
    throw ConfigError(e.what());
  }
}

std::array<Vec3, 3> derivatives(const Curve& curve, double s) {
  return {curve.derivative(s, 1), curve.derivative(s, 2), curve.derivative(s, 3)};
}

CurvatureTorsion curvature_torsion(const Curve& curve, double s) {
  const auto [d1, d2, d3] = derivatives(curve, s);
  CurvatureTorsion out;
  out.curvature = d2.norm();
  if (out.curvature < kFrenetCurvatureFloor) {
    out.torsion_defined = false;
    return out;
  }
  const Vec3 c = d1.cross(d2);
  out.torsion = c.dot(d3) / c.squaredNorm();
  return out;
}

FrenetFrame frenet(const Curve& curve, double s) {
  const auto [d1, d2, d3] = derivatives(curve, s);
  const double kappa = d2.norm();
  if (kappa < kFrenetCurvatureFloor) throw FrenetUndefined(s);
  FrenetFrame f;
  f.tangent = d1;
  f.normal = d2 / kappa;
  f.binormal = f.tangent.cross(f.normal);
  f.curvature = kappa;
  const Vec3 c = d1.cross(d2);
  f.torsion = c.dot(d3) / c.squaredNorm();
  return f;
}

SpeedReport check_unit_speed(const Curve& curve, int probes) {
  probes = std::max(probes, 2);
  SpeedReport report;
  report.min_speed = INFINITY;
  for (int i = 0; i < probes; ++i) {
    const double speed = curve.derivative(curve.domain().uniform(i, probes), 1).norm();
    report.max_speed_error = std::max(report.max_speed_error, std::abs(speed - 1.0));
    report.min_speed = std::min(report.min_speed, speed);
  }
  report.ok = report.max_speed_error <= kUnitSpeedTolerance;
  return report;
}

void require_unit_speed(const Curve& curve, int probes) {
  const SpeedReport report = check_unit_speed(curve, probes);
  if (report.min_speed < 1e-9) throw PreconditionViolated("curve is not regular (|r'| vanishes)");
  if (!report.ok) {
    throw PreconditionViolated("curve is not unit speed (max ||r'|-1| = " +
                               std::to_string(report.max_speed_error) + ")");
  }
}

}  // namespace surfpen
