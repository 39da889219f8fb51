#include "surfpen/pencil.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "surfpen/error.hpp"

namespace surfpen {

namespace {

constexpr double kProbeTolerance = 1e-9;

}  // namespace

ScaleTerm::ScaleTerm(Expr expr, AngleFactor factor)
    : expr_(std::move(expr)), d_s_(expr_.derivative(Var::s)), d_t_(expr_.derivative(Var::t)), factor_(factor) {}

ScaleTerm::Value ScaleTerm::evaluate(double s, double t, const Frame& frame) const {
  const double e = expr_.eval(s, t);
  const double es = d_s_.eval(s, t);
  const double et = d_t_.eval(s, t);
  if (factor_ == AngleFactor::one) return {e, es, et};

  if (!frame.theta_defined) {
    throw PreconditionViolated("marching scale needs theta but the frame has none at s = " + std::to_string(s));
  }
  const double c = std::cos(frame.theta);
  const double sn = std::sin(frame.theta);
  if (factor_ == AngleFactor::cos_theta) {
    return {e * c, es * c - e * sn * frame.theta_rate, et * c};
  }
  return {e * sn, es * sn + e * c * frame.theta_rate, et * sn};
}

MarchingScale::MarchingScale(ScaleTerm a, ScaleTerm b, ScaleTerm c, double t0, Interval t_range)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), t0_(t0), t_range_(t_range) {
  if (!(t_range.hi > t_range.lo)) throw PreconditionViolated("t interval must satisfy t_min < t_max");
  if (!t_range.contains(t0)) throw PreconditionViolated("t0 must lie in [t_min, t_max]");
}

bool MarchingScale::uses_theta() const {
  return a_.factor() != AngleFactor::one || b_.factor() != AngleFactor::one || c_.factor() != AngleFactor::one;
}

MarchingScale::Values MarchingScale::evaluate(double s, double t, const Frame& frame) const {
  return {a_.evaluate(s, t, frame), b_.evaluate(s, t, frame), c_.evaluate(s, t, frame)};
}

SurfacePatch::SurfacePatch(FrameField frame, MarchingScale scale, GridSize grid)
    : SurfacePatch(frame, std::move(scale), frame.curve().domain(), grid) {}

SurfacePatch::SurfacePatch(FrameField frame, MarchingScale scale, Interval s_range, GridSize grid)
    : frame_(std::move(frame)), scale_(std::move(scale)), s_range_(s_range), grid_(grid) {
  const Interval& d = frame_.curve().domain();
  if (!(s_range.hi > s_range.lo)) throw PreconditionViolated("s interval must satisfy s_min < s_max");
  if (!d.contains(s_range.lo, 1e-12) || !d.contains(s_range.hi, 1e-12)) {
    throw PreconditionViolated("patch s interval lies outside the curve interval");
  }
  if (grid.ns < 2 || grid.nt < 2) throw PreconditionViolated("grid sizes ns and nt must be at least 2");
  if (scale_.uses_theta() && !frame_.has_theta()) {
    throw PreconditionViolated("marching scale uses theta but the frame field has none");
  }
}

Vec3 SurfacePatch::point(double s, double t) const {
  const Frame f = frame_.at(s);
  const auto m = scale_.evaluate(s, t, f);
  return frame_.curve().point(s) + m.a.value * f.tangent + m.b.value * f.u + m.c.value * f.v;
}

std::vector<Vec3> SurfacePatch::evaluate_grid() const {
  std::vector<Vec3> out;
  out.reserve(static_cast<std::size_t>(grid_.ns) * grid_.nt);
  for (int i = 0; i < grid_.ns; ++i) {
    const double s = grid_s(i);
    const Frame f = frame_.at(s);
    const Vec3 r = frame_.curve().point(s);
    for (int j = 0; j < grid_.nt; ++j) {
      const auto m = scale_.evaluate(s, grid_t(j), f);
      out.push_back(r + m.a.value * f.tangent + m.b.value * f.u + m.c.value * f.v);
    }
  }
  return out;
}

SurfaceNormal closed_form_normal(const SurfacePatch& patch, double s, double t) {
  const Frame f = patch.frame().at(s);
  const auto [a, b, c] = patch.scale().evaluate(s, t, f);

  // kappa cos(theta) = r''.U and kappa sin(theta) = -r''.V for any RMF, so the
  // expansion stays valid where theta itself is not tracked.
  const Vec3 r2 = patch.curve().derivative(s, 2);
  const double k_cos = r2.dot(f.u);
  const double k_sin = -r2.dot(f.v);

  // P_s = along_t T + along_u U + along_v V, P_t = (a_t, b_t, c_t).
  const double along_t = 1.0 + a.d_s - b.value * k_cos + c.value * k_sin;
  const double along_u = a.value * k_cos + b.d_s;
  const double along_v = c.d_s - a.value * k_sin;

  SurfaceNormal n;
  n.components = {c.d_t * along_u - b.d_t * along_v,
                  a.d_t * along_v - c.d_t * along_t,
                  b.d_t * along_t - a.d_t * along_u};
  n.vector = n.components.x() * f.tangent + n.components.y() * f.u + n.components.z() * f.v;
  n.degenerate = n.vector.norm() < kDegenerateNormal;
  return n;
}

PhiTriple phi_components(const SurfacePatch& patch, double s) {
  const double t0 = patch.t0();
  const Frame f = patch.frame().at(s);
  const auto [a, b, c] = patch.scale().evaluate(s, t0, f);
  const double worst = std::max({std::abs(a.value), std::abs(b.value), std::abs(c.value)});
  if (worst > ConditionTolerances{}.isoparametric) {
    throw IsoparametricViolated("marching scale does not vanish at t0 (max |a|,|b|,|c| = " +
                                std::to_string(worst) + " at s = " + std::to_string(s) + ")");
  }
  return {0.0, -c.d_t, b.d_t};
}

ConditionReport check_conditions(const SurfacePatch& patch, const ConditionTolerances& tol) {
  ConditionReport report;
  const int probes = std::max(tol.probes, 2);
  const Interval s_range = patch.domain().s;
  const double t0 = patch.t0();

  report.probes.reserve(static_cast<std::size_t>(probes));
  for (int i = 0; i < probes; ++i) {
    ConditionProbe p;
    p.s = s_range.uniform(i, probes);
    const Frame f = patch.frame().at(p.s);
    const auto [a, b, c] = patch.scale().evaluate(p.s, t0, f);
    p.iso_residual = std::max({std::abs(a.value), std::abs(b.value), std::abs(c.value)});

    if (f.curvature < kFrenetCurvatureFloor) {
      p.vacuous = true;
    } else {
      const Vec3 r2 = patch.curve().derivative(p.s, 2);
      p.asym_residual = std::abs(r2.dot(f.u) * c.d_t - r2.dot(f.v) * b.d_t);
    }
    p.degenerate = closed_form_normal(patch, p.s, t0).degenerate;

    report.iso_residual = std::max(report.iso_residual, p.iso_residual);
    report.asym_residual = std::max(report.asym_residual, p.asym_residual);
    report.vacuous_probes += p.vacuous ? 1 : 0;
    report.degenerate_probes += p.degenerate ? 1 : 0;
    report.probes.push_back(p);
  }

  report.rmf_residual = rmf_residual(patch.frame());
  report.theta_rate_residual = theta_rate_residual(patch.frame());

  report.isoparametric = report.iso_residual <= tol.isoparametric;
  report.asymptotic = report.asym_residual <= tol.asymptotic;
  report.rmf_ok = patch.frame().method() != FrameMethod::frenet && report.rmf_residual <= tol.rmf;
  report.theta_ok = std::isnan(report.theta_rate_residual) || report.theta_rate_residual <= tol.theta_rate;
  return report;
}

MarchingScale build_sufficient(const Expr& f, const Expr& a, const FrameField& frame, double t0,
                               Interval t_range) {
  if (!frame.has_theta()) throw PreconditionViolated("build_sufficient needs a frame field carrying theta");
  const Interval& d = frame.curve().domain();
  constexpr int probes = 200;
  for (int i = 0; i < probes; ++i) {
    const double s = d.uniform(i, probes);
    if (std::abs(f.eval(s, t0)) > kProbeTolerance) {
      throw PreconditionViolated("f(s, t0) does not vanish at s = " + std::to_string(s));
    }
    if (std::abs(a.eval(s, t0)) > kProbeTolerance) {
      throw PreconditionViolated("a(s, t0) does not vanish at s = " + std::to_string(s));
    }
  }
  return MarchingScale(ScaleTerm(a), ScaleTerm(-f, AngleFactor::cos_theta), ScaleTerm(f, AngleFactor::sin_theta), t0,
                       t_range);
}

}  // namespace surfpen
