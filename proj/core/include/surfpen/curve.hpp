#pragma once

#include <array>
#include <string_view>

#include "surfpen/expr.hpp"
#include "surfpen/geometry.hpp"

namespace surfpen {

class KeyValueFile;

/// Curvature below which the principal normal, and with it the Frenet
/// frame, is considered undefined.
inline constexpr double kFrenetCurvatureFloor = 1e-9;
inline constexpr int kDefaultCurveProbes = 1000;
inline constexpr double kUnitSpeedTolerance = 1e-6;

/// Space curve s -> (x(s), y(s), z(s)) on [lo, hi], s intended to be arc length.
///
/// Coordinates are expressions in s only; derivatives up to third order are
/// obtained symbolically once at construction.
class Curve {
 public:
  /// Throws PreconditionViolated when a coordinate depends on t or the
  /// interval is empty.
  Curve(std::array<Expr, 3> coordinates, Interval domain);

  static Curve from_text(std::string_view x, std::string_view y, std::string_view z, Interval domain);

  const Interval& domain() const { return domain_; }
  const Expr& coordinate(int axis, int order = 0) const { return derivs_[order][axis]; }

  Vec3 point(double s) const { return derivative(s, 0); }
  /// order in 0..3
  Vec3 derivative(double s, int order) const;

 private:
  std::array<std::array<Expr, 3>, 4> derivs_;
  Interval domain_;
};

/// Reads `x`, `y`, `z`, `s_min`, `s_max` from a definition file.
Curve load_curve(const KeyValueFile& file);

/// r'(s), r''(s), r'''(s).
std::array<Vec3, 3> derivatives(const Curve& curve, double s);

struct CurvatureTorsion {
  double curvature = 0.0;
  double torsion = 0.0;
  /// false when the curvature is below kFrenetCurvatureFloor; torsion is then reported as 0.
  bool torsion_defined = true;
};

/// kappa = |r''|, tau = (r' x r'') . r''' / |r' x r''|^2 for a unit-speed curve.
CurvatureTorsion curvature_torsion(const Curve& curve, double s);

struct FrenetFrame {
  Vec3 tangent;
  Vec3 normal;
  Vec3 binormal;
  double curvature = 0.0;
  double torsion = 0.0;
};

/// Throws FrenetUndefined when the curvature vanishes.
FrenetFrame frenet(const Curve& curve, double s);

struct SpeedReport {
  double max_speed_error = 0.0;
  double min_speed = 0.0;
  bool ok = false;
};

SpeedReport check_unit_speed(const Curve& curve, int probes = kDefaultCurveProbes);

/// Throws PreconditionViolated unless the curve is regular and unit speed.
void require_unit_speed(const Curve& curve, int probes = kDefaultCurveProbes);

}  // namespace surfpen
