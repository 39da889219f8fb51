#pragma once

#include "surfpen/pencil.hpp"

namespace surfpen {

/// Ruled pencil member P(s,t) = r(s) + (t - t0) d(s) with director
/// d(s) = g(s) T - cos(theta) U + sin(theta) V.
class RuledPatch final : public Surface {
 public:
  /// g must not depend on t. Throws PreconditionViolated otherwise, or when
  /// the frame carries no theta.
  RuledPatch(FrameField frame, Expr g, double t0, Interval s_range, Interval t_range, GridSize grid = {});

  Vec3 point(double s, double t) const override { return patch_.point(s, t); }
  Rect domain() const override { return patch_.domain(); }

  /// Underlying pencil member with a = (t - t0) g, b = (t0 - t) cos(theta), c = (t - t0) sin(theta).
  const SurfacePatch& patch() const { return patch_; }
  const Expr& g() const { return g_; }
  const Expr& g_prime() const { return g_prime_; }
  double t0() const { return patch_.t0(); }

  Vec3 director(double s) const;

 private:
  SurfacePatch patch_;
  Expr g_;
  Expr g_prime_;
};

RuledPatch build_ruled(const FrameField& frame, const Expr& g, double t0, Interval s_range, Interval t_range,
                       GridSize grid = {});

/// d'(s) = (g' + kappa) T + (g kappa cos(theta) - tau sin(theta)) U - (g kappa sin(theta) + tau cos(theta)) V.
Vec3 director_derivative(const RuledPatch& patch, double s);

/// det(r', d, d') with rows in that order; equal to tau(s) for every g and theta0.
double developability_determinant(const RuledPatch& patch, double s);

struct RuledTolerances {
  double planar = 1e-7;
  double developable = 1e-6;
  double plane = 1e-6;
  int probes = 200;
};

struct RuledClassification {
  bool planar_curve = false;
  bool developable = false;
  bool plane = false;
  double max_torsion = 0.0;
  double max_determinant = 0.0;
  /// Largest deviation of the unit normal from its first regular grid value (up to sign).
  double normal_spread = 0.0;
};

RuledClassification classify(const RuledPatch& patch, const RuledTolerances& tol = {});

}  // namespace surfpen
