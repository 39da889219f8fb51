#pragma once

#include <vector>

#include "surfpen/expr.hpp"
#include "surfpen/frames.hpp"
#include "surfpen/geometry.hpp"
#include "surfpen/surface.hpp"

namespace surfpen {

/// Multiplier applied to a marching-scale expression. theta is only known on
/// the frame grid, so it enters as a per-parameter numeric factor rather than
/// as part of the expression.
enum class AngleFactor { one, cos_theta, sin_theta };

/// One marching-scale coefficient: expr(s, t) * factor(theta(s)).
class ScaleTerm {
 public:
  struct Value {
    double value = 0.0;
    double d_s = 0.0;
    double d_t = 0.0;
  };

  ScaleTerm() = default;
  ScaleTerm(Expr expr, AngleFactor factor = AngleFactor::one);

  const Expr& expr() const { return expr_; }
  const Expr& d_s() const { return d_s_; }
  const Expr& d_t() const { return d_t_; }
  AngleFactor factor() const { return factor_; }

  /// Value and partials at (s, t); the s-partial of an angular factor uses
  /// the frame's theta rate. Throws PreconditionViolated when the factor
  /// needs theta and the frame has none at s.
  Value evaluate(double s, double t, const Frame& frame) const;

 private:
  Expr expr_;
  Expr d_s_;
  Expr d_t_;
  AngleFactor factor_ = AngleFactor::one;
};

/// The marching-scale triple (a, b, c) of a pencil member together with the
/// parameter t0 of the interpolated curve.
class MarchingScale {
 public:
  struct Values {
    ScaleTerm::Value a;
    ScaleTerm::Value b;
    ScaleTerm::Value c;
  };

  /// Throws PreconditionViolated unless t0 lies in t_range and t_range is non-empty.
  MarchingScale(ScaleTerm a, ScaleTerm b, ScaleTerm c, double t0, Interval t_range);

  const ScaleTerm& a() const { return a_; }
  const ScaleTerm& b() const { return b_; }
  const ScaleTerm& c() const { return c_; }
  double t0() const { return t0_; }
  const Interval& t_range() const { return t_range_; }
  bool uses_theta() const;

  Values evaluate(double s, double t, const Frame& frame) const;

 private:
  ScaleTerm a_;
  ScaleTerm b_;
  ScaleTerm c_;
  double t0_;
  Interval t_range_;
};

struct GridSize {
  int ns = 200;
  int nt = 50;
};

/// Pencil member P(s,t) = r(s) + a T(s) + b U(s) + c V(s).
class SurfacePatch final : public Surface {
 public:
  SurfacePatch(FrameField frame, MarchingScale scale, GridSize grid = {});
  /// s_range must lie inside the curve interval.
  SurfacePatch(FrameField frame, MarchingScale scale, Interval s_range, GridSize grid = {});

  Vec3 point(double s, double t) const override;
  Rect domain() const override { return {s_range_, scale_.t_range()}; }

  const Curve& curve() const { return frame_.curve(); }
  const FrameField& frame() const { return frame_; }
  const MarchingScale& scale() const { return scale_; }
  double t0() const { return scale_.t0(); }
  GridSize grid() const { return grid_; }

  double grid_s(int i) const { return s_range_.uniform(i, grid_.ns); }
  double grid_t(int j) const { return scale_.t_range().uniform(j, grid_.nt); }
  /// ns * nt points, index i * nt + j for (grid_s(i), grid_t(j)).
  std::vector<Vec3> evaluate_grid() const;

 private:
  FrameField frame_;
  MarchingScale scale_;
  Interval s_range_;
  GridSize grid_;
};

inline Vec3 eval_surface(const SurfacePatch& patch, double s, double t) { return patch.point(s, t); }

inline constexpr double kDegenerateNormal = 1e-12;

struct SurfaceNormal {
  /// Unnormalised P_s x P_t.
  Vec3 vector;
  /// Components of `vector` along (T, U, V).
  Vec3 components;
  bool degenerate = false;
};

/// P_s x P_t expanded in the rotation-minimizing frame, using only the curve's
/// curvature, theta and the symbolic partials of a, b, c.
SurfaceNormal closed_form_normal(const SurfacePatch& patch, double s, double t);

/// Components of n(s, t0) along (T, U, V).
struct PhiTriple {
  double phi1 = 0.0;
  double phi2 = 0.0;
  double phi3 = 0.0;
};

/// (0, -c_t, b_t) at (s, t0). Throws IsoparametricViolated when a, b or c
/// does not vanish at t0.
PhiTriple phi_components(const SurfacePatch& patch, double s);

struct ConditionTolerances {
  double isoparametric = 1e-8;
  double asymptotic = 1e-7;
  double rmf = 1e-4;
  double theta_rate = 1e-6;
  int probes = 200;
};

struct ConditionProbe {
  double s = 0.0;
  double iso_residual = 0.0;
  double asym_residual = 0.0;
  /// Curvature vanishes: the asymptotic condition holds trivially.
  bool vacuous = false;
  /// |n(s, t0)| below kDegenerateNormal, the surface is not regular there.
  bool degenerate = false;
};

struct ConditionReport {
  bool isoparametric = false;
  bool asymptotic = false;
  bool rmf_ok = false;
  bool theta_ok = false;
  double iso_residual = 0.0;
  double asym_residual = 0.0;
  double rmf_residual = 0.0;
  /// NaN when theta is not available on the whole frame grid.
  double theta_rate_residual = 0.0;
  int vacuous_probes = 0;
  int degenerate_probes = 0;
  std::vector<ConditionProbe> probes;

  bool passed() const { return isoparametric && asymptotic && rmf_ok && theta_ok; }
};

/// Decides whether r(s) is an isoparametric (a = b = c = 0 at t0) and
/// asymptotic (kappa cos(theta) c_t + kappa sin(theta) b_t = 0 at t0) curve
/// of the patch on a uniform s-probe.
ConditionReport check_conditions(const SurfacePatch& patch, const ConditionTolerances& tol = {});

/// Marching scale b = -f cos(theta), c = f sin(theta) with the given a. Requires
/// f(s, t0) = a(s, t0) = 0 on the curve (PreconditionViolated otherwise) and
/// a frame carrying theta.
MarchingScale build_sufficient(const Expr& f, const Expr& a, const FrameField& frame, double t0,
                               Interval t_range);

}  // namespace surfpen
