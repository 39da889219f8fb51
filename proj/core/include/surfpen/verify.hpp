#pragma once

#include <functional>
#include <vector>

#include "surfpen/geometry.hpp"
#include "surfpen/surface.hpp"

namespace surfpen {

class SurfacePatch;

/// Differencing step for surface derivatives.
inline constexpr double kSurfaceStep = 1e-4;

/// First and second fundamental forms from finite differences of P alone.
struct FundamentalForms {
  double E = 0.0;
  double F = 0.0;
  double G = 0.0;
  double L = 0.0;
  double M = 0.0;
  double N = 0.0;
  double gaussian_curvature = 0.0;
  Vec3 unit_normal = Vec3::Zero();
  /// EG - F^2 below 1e-14.
  bool degenerate = false;
};

/// Central differences where the stencil fits the parameter rectangle,
/// second-order one-sided differences at its edges.
FundamentalForms fundamental_forms(const Surface& surface, double s, double t, double h = kSurfaceStep);

/// Unit normal from differenced P_s x P_t; zero vector when degenerate.
Vec3 numeric_unit_normal(const Surface& surface, double s, double t, double h = kSurfaceStep);

struct NormalCurvatureReport {
  std::vector<double> s;
  /// k_n = n.r'' per probe; NaN at degenerate probes.
  std::vector<double> values;
  double max_abs = 0.0;
  int degenerate = 0;
};

/// Normal curvature of the embedded curve t = t0 (a unit-speed curve with
/// second derivative `second_derivative`) on a uniform s-probe.
NormalCurvatureReport normal_curvature_along_curve(const Surface& surface, double t0,
                                                   const std::function<Vec3(double)>& second_derivative,
                                                   int probes = 200);

/// Same, for the curve interpolated by a pencil member at its t0.
NormalCurvatureReport normal_curvature_along_curve(const SurfacePatch& patch, int probes = 200);

struct CurvatureGrid {
  int ns = 0;
  int nt = 0;
  /// Index i * nt + j; NaN at degenerate samples.
  std::vector<double> values;
  int degenerate = 0;
  /// Over regular samples only.
  double min = 0.0;
  double max = 0.0;

  double at(int i, int j) const { return values[static_cast<std::size_t>(i) * nt + j]; }
};

/// Gaussian curvature on an ns x nt grid strictly inside the rectangle.
CurvatureGrid gaussian_curvature_grid(const Surface& surface, int ns, int nt);

/// Grid point i of n strictly interior points of the interval.
inline double interior_point(const Interval& d, int i, int n) {
  return d.lo + d.length() * (static_cast<double>(i) + 1.0) / (static_cast<double>(n) + 1.0);
}

}  // namespace surfpen
