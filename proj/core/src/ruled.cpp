#include "surfpen/ruled.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "surfpen/error.hpp"

namespace surfpen {

namespace {

MarchingScale ruled_scale(const Expr& g, double t0, Interval t_range) {
  const Expr t = Expr::variable(Var::t);
  const Expr offset = t - Expr::number(t0);
  return MarchingScale(ScaleTerm(offset * g), ScaleTerm(-offset, AngleFactor::cos_theta),
                       ScaleTerm(offset, AngleFactor::sin_theta), t0, t_range);
}

}  // namespace

RuledPatch::RuledPatch(FrameField frame, Expr g, double t0, Interval s_range, Interval t_range, GridSize grid)
    : patch_(std::move(frame), ruled_scale(g, t0, t_range), s_range, grid),
      g_(std::move(g)),
      g_prime_(g_.derivative(Var::s)) {
  if (g_.depends_on(Var::t)) throw PreconditionViolated("ruling coefficient g must depend on s only");
}

Vec3 RuledPatch::director(double s) const {
  const Frame f = patch_.frame().at(s);
  return g_.eval(s, 0.0) * f.tangent - std::cos(f.theta) * f.u + std::sin(f.theta) * f.v;
}

RuledPatch build_ruled(const FrameField& frame, const Expr& g, double t0, Interval s_range, Interval t_range,
                       GridSize grid) {
  return RuledPatch(frame, g, t0, s_range, t_range, grid);
}

Vec3 director_derivative(const RuledPatch& patch, double s) {
  const Frame f = patch.patch().frame().at(s);
  const double g = patch.g().eval(s, 0.0);
  const double dg = patch.g_prime().eval(s, 0.0);
  const double kappa = f.curvature;
  const double tau = f.torsion;
  const double c = std::cos(f.theta);
  const double sn = std::sin(f.theta);
  return (dg + kappa) * f.tangent + (g * kappa * c - tau * sn) * f.u - (g * kappa * sn + tau * c) * f.v;
}

double developability_determinant(const RuledPatch& patch, double s) {
  Eigen::Matrix3d m;
  m.row(0) = patch.patch().curve().derivative(s, 1).transpose();
  m.row(1) = patch.director(s).transpose();
  m.row(2) = director_derivative(patch, s).transpose();
  return m.determinant();
}

RuledClassification classify(const RuledPatch& patch, const RuledTolerances& tol) {
  RuledClassification out;
  const Rect rect = patch.domain();
  const int probes = std::max(tol.probes, 2);
  for (int i = 0; i < probes; ++i) {
    const double s = rect.s.uniform(i, probes);
    out.max_torsion = std::max(out.max_torsion, std::abs(curvature_torsion(patch.patch().curve(), s).torsion));
    out.max_determinant = std::max(out.max_determinant, std::abs(developability_determinant(patch, s)));
  }
  out.planar_curve = out.max_torsion <= tol.planar;
  out.developable = out.max_determinant <= tol.developable;

  const GridSize grid = patch.patch().grid();
  bool have_reference = false;
  Vec3 reference;
  for (int i = 0; i < grid.ns; ++i) {
    for (int j = 0; j < grid.nt; ++j) {
      const auto n = closed_form_normal(patch.patch(), patch.patch().grid_s(i), patch.patch().grid_t(j));
      if (n.degenerate) continue;
      const Vec3 unit = n.vector.normalized();
      if (!have_reference) {
        reference = unit;
        have_reference = true;
        continue;
      }
      out.normal_spread = std::max(out.normal_spread, std::min((unit - reference).norm(), (unit + reference).norm()));
    }
  }
  out.plane = out.developable && have_reference && out.normal_spread <= tol.plane;
  return out;
}

}  // namespace surfpen
