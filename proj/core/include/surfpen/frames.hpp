#pragma once

#include <span>
#include <vector>

#include "surfpen/curve.hpp"
#include "surfpen/geometry.hpp"

namespace surfpen {

inline constexpr int kDefaultFrameResolution = 512;

enum class FrameMethod {
  theta_integration,  ///< theta' = -tau integrated with RK4, U/V rotated from (N, B)
  double_reflection,  ///< discrete transport by two reflections per step
  frenet,             ///< (U, V) = (N, B); not rotation minimizing unless tau = 0
};

/// One grid sample of an adapted frame {T, U, V}.
struct FrameSample {
  double s = 0.0;
  Vec3 tangent;
  Vec3 u;
  Vec3 v;
  /// Angle from N to U, unwrapped along the grid. NaN where undefined.
  double theta = 0.0;
  bool theta_defined = false;
  double curvature = 0.0;
  double torsion = 0.0;
};

/// Frame evaluated at an arbitrary parameter.
struct Frame {
  Vec3 tangent;
  Vec3 u;
  Vec3 v;
  double theta = 0.0;
  /// d(theta)/ds, equal to -tau for a rotation-minimizing frame.
  double theta_rate = 0.0;
  double curvature = 0.0;
  double torsion = 0.0;
  bool theta_defined = false;
};

/// Adapted frame sampled on a uniform grid over the curve's interval.
class FrameField {
 public:
  /// Samples must be uniformly spaced, at least two, covering the curve interval.
  FrameField(Curve curve, std::vector<FrameSample> samples, FrameMethod method);

  const Curve& curve() const { return curve_; }
  std::span<const FrameSample> samples() const { return samples_; }
  FrameMethod method() const { return method_; }
  int intervals() const { return static_cast<int>(samples_.size()) - 1; }
  double step() const { return step_; }
  /// True when theta is available at every sample.
  bool has_theta() const { return has_theta_; }

  /// Frenet data is exact at s; theta is linearly interpolated between samples
  /// (extrapolated from the end segments just outside the grid). Where theta is
  /// unavailable, U is interpolated between samples and re-orthogonalised.
  Frame at(double s) const;

 private:
  Curve curve_;
  std::vector<FrameSample> samples_;
  FrameMethod method_;
  double step_ = 0.0;
  bool has_theta_ = false;
};

/// RMF from theta' = -tau with theta(L1) = theta0, classical RK4 on n steps.
/// Throws FrenetUndefined if the curvature vanishes anywhere on the grid and
/// PreconditionViolated for non unit-speed curves.
FrameField rmf_by_theta(const Curve& curve, double theta0, int n = kDefaultFrameResolution);

/// RMF by the double-reflection transport of u0 (which must be a unit vector
/// orthogonal to T(L1)). Works where the curvature vanishes.
FrameField rmf_double_reflection(const Curve& curve, const Vec3& u0, int n = kDefaultFrameResolution);

/// The Frenet frame in the field layout, (U, V) = (N, B).
FrameField frenet_field(const Curve& curve, int n = kDefaultFrameResolution);

/// max over interior samples of |U'.V| + |V'.U|, derivatives by central
/// differences on the grid (5-point stencil, 3-point below five samples).
double rmf_residual(const FrameField& field);

/// Residual at a single interior sample index (clamped to the valid range).
double rmf_residual_at(const FrameField& field, int index);

/// max |theta' + tau| over interior samples, theta' by central differences.
/// Returns NaN when theta is not available everywhere.
double theta_rate_residual(const FrameField& field);

}  // namespace surfpen
