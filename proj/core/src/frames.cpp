#include "surfpen/frames.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <type_traits>

#include "surfpen/error.hpp"

namespace surfpen {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kUnitTolerance = 1e-9;

// Brings `angle` within pi of `reference` by whole turns.
double unwrap(double angle, double reference) {
  constexpr double turn = 2.0 * std::numbers::pi;
  return angle - turn * std::round((angle - reference) / turn);
}

FrameSample sample_from_theta(const Curve& curve, double s, double theta) {
  const FrenetFrame f = frenet(curve, s);
  FrameSample out;
  out.s = s;
  out.tangent = f.tangent;
  out.u = std::cos(theta) * f.normal + std::sin(theta) * f.binormal;
  out.v = -std::sin(theta) * f.normal + std::cos(theta) * f.binormal;
  out.theta = theta;
  out.theta_defined = true;
  out.curvature = f.curvature;
  out.torsion = f.torsion;
  return out;
}

double grid_point(const Interval& d, int i, int n) { return d.uniform(i, n + 1); }

void require_intervals(int n) {
  if (n < 2) throw PreconditionViolated("frame resolution must be at least 2, got " + std::to_string(n));
}

}  // namespace

FrameField::FrameField(Curve curve, std::vector<FrameSample> samples, FrameMethod method)
    : curve_(std::move(curve)), samples_(std::move(samples)), method_(method) {
  if (samples_.size() < 2) throw PreconditionViolated("a frame field needs at least two samples");
  step_ = (samples_.back().s - samples_.front().s) / static_cast<double>(samples_.size() - 1);
  if (!(step_ > 0.0)) throw PreconditionViolated("frame samples must be increasing in s");
  has_theta_ = std::all_of(samples_.begin(), samples_.end(), [](const FrameSample& x) { return x.theta_defined; });
}

Frame FrameField::at(double s) const {
  const int n = intervals();
  const double pos = (s - samples_.front().s) / step_;
  const int i = std::clamp(static_cast<int>(std::floor(pos)), 0, n - 1);
  const double w = pos - i;
  const FrameSample& a = samples_[i];
  const FrameSample& b = samples_[i + 1];

  Frame out;
  const auto ct = curvature_torsion(curve_, s);
  out.curvature = ct.curvature;
  out.torsion = ct.torsion;

  if (method_ == FrameMethod::frenet) {
    const FrenetFrame f = frenet(curve_, s);
    out.tangent = f.tangent;
    out.u = f.normal;
    out.v = f.binormal;
    out.theta = 0.0;
    out.theta_rate = 0.0;
    out.theta_defined = true;
    return out;
  }

  if (a.theta_defined && b.theta_defined && ct.torsion_defined) {
    out.theta = (1.0 - w) * a.theta + w * b.theta;
    const FrenetFrame f = frenet(curve_, s);
    out.tangent = f.tangent;
    out.u = std::cos(out.theta) * f.normal + std::sin(out.theta) * f.binormal;
    out.v = -std::sin(out.theta) * f.normal + std::cos(out.theta) * f.binormal;
    out.theta_rate = -f.torsion;
    out.theta_defined = true;
    return out;
  }

  out.tangent = curve_.derivative(s, 1).normalized();
  Vec3 u = (1.0 - w) * a.u + w * b.u;
  u -= u.dot(out.tangent) * out.tangent;
  out.u = u.normalized();
  out.v = out.tangent.cross(out.u);
  out.theta = kNaN;
  out.theta_rate = kNaN;
  out.theta_defined = false;
  return out;
}

FrameField rmf_by_theta(const Curve& curve, double theta0, int n) {
  require_intervals(n);
  require_unit_speed(curve);
  const Interval& d = curve.domain();
  const double h = d.length() / n;
  auto rate = [&](double s) { return -frenet(curve, s).torsion; };

  std::vector<FrameSample> samples;
  samples.reserve(static_cast<std::size_t>(n) + 1);
  double theta = theta0;
  samples.push_back(sample_from_theta(curve, d.lo, theta));
  for (int i = 0; i < n; ++i) {
    const double s = grid_point(d, i, n);
    const double k1 = rate(s);
    const double k2 = rate(s + 0.5 * h);
    const double k3 = k2;  // theta' does not depend on theta
    const double k4 = rate(s + h);
    theta += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    samples.push_back(sample_from_theta(curve, grid_point(d, i + 1, n), theta));
  }
  return FrameField(curve, std::move(samples), FrameMethod::theta_integration);
}

FrameField rmf_double_reflection(const Curve& curve, const Vec3& u0, int n) {
  require_intervals(n);
  require_unit_speed(curve);
  const Interval& d = curve.domain();

  Vec3 tangent = curve.derivative(d.lo, 1).normalized();
  if (std::abs(u0.norm() - 1.0) > kUnitTolerance || std::abs(u0.dot(tangent)) > kUnitTolerance) {
    throw PreconditionViolated("initial U must be a unit vector orthogonal to T(L1)");
  }

  std::vector<FrameSample> samples;
  samples.reserve(static_cast<std::size_t>(n) + 1);

  auto make_sample = [&](double s, const Vec3& t, const Vec3& u) {
    FrameSample x;
    x.s = s;
    x.tangent = t;
    x.u = u;
    x.v = t.cross(u);
    const auto ct = curvature_torsion(curve, s);
    x.curvature = ct.curvature;
    x.torsion = ct.torsion;
    if (ct.torsion_defined) {
      const FrenetFrame f = frenet(curve, s);
      x.theta = std::atan2(u.dot(f.binormal), u.dot(f.normal));
      x.theta_defined = true;
    } else {
      x.theta = kNaN;
    }
    return x;
  };

  Vec3 point = curve.point(d.lo);
  Vec3 u = u0;
  samples.push_back(make_sample(d.lo, tangent, u));
  for (int i = 1; i <= n; ++i) {
    const double s = grid_point(d, i, n);
    const Vec3 next_point = curve.point(s);
    const Vec3 next_tangent = curve.derivative(s, 1).normalized();

    // Reflect across the bisector plane of the chord, then across the plane
    // mapping the reflected tangent onto the new tangent.
    const Vec3 v1 = next_point - point;
    const double c1 = v1.squaredNorm();
    Vec3 u_reflected = u;
    Vec3 t_reflected = tangent;
    if (c1 > 0.0) {
      u_reflected = u - (2.0 / c1) * v1.dot(u) * v1;
      t_reflected = tangent - (2.0 / c1) * v1.dot(tangent) * v1;
    }
    const Vec3 v2 = next_tangent - t_reflected;
    const double c2 = v2.squaredNorm();
    Vec3 next_u = c2 > 0.0 ? Vec3(u_reflected - (2.0 / c2) * v2.dot(u_reflected) * v2) : u_reflected;

    next_u -= next_u.dot(next_tangent) * next_tangent;
    next_u.normalize();

    samples.push_back(make_sample(s, next_tangent, next_u));
    point = next_point;
    tangent = next_tangent;
    u = next_u;
  }

  // Continuous theta across the grid.
  double reference = kNaN;
  for (auto& x : samples) {
    if (!x.theta_defined) continue;
    if (!std::isnan(reference)) x.theta = unwrap(x.theta, reference);
    reference = x.theta;
  }
  return FrameField(curve, std::move(samples), FrameMethod::double_reflection);
}

FrameField frenet_field(const Curve& curve, int n) {
  require_intervals(n);
  const Interval& d = curve.domain();
  std::vector<FrameSample> samples;
  samples.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    const double s = grid_point(d, i, n);
    const FrenetFrame f = frenet(curve, s);
    FrameSample x;
    x.s = s;
    x.tangent = f.tangent;
    x.u = f.normal;
    x.v = f.binormal;
    x.theta = 0.0;
    x.theta_defined = true;
    x.curvature = f.curvature;
    x.torsion = f.torsion;
    samples.push_back(x);
  }
  return FrameField(curve, std::move(samples), FrameMethod::frenet);
}

namespace {

template <typename Get>
auto central_difference(std::span<const FrameSample> x, int i, double h, Get get) {
  using Value = std::decay_t<decltype(get(x[0]))>;
  if (x.size() >= 5) {
    const Value d = ((get(x[i - 2]) - get(x[i + 2])) + 8.0 * (get(x[i + 1]) - get(x[i - 1]))) / (12.0 * h);
    return d;
  }
  const Value d = (get(x[i + 1]) - get(x[i - 1])) / (2.0 * h);
  return d;
}

std::pair<int, int> interior_range(std::span<const FrameSample> x) {
  const int last = static_cast<int>(x.size()) - 1;
  return x.size() >= 5 ? std::pair{2, last - 2} : std::pair{1, last - 1};
}

}  // namespace

double rmf_residual_at(const FrameField& field, int index) {
  const auto x = field.samples();
  if (x.size() < 3) throw PreconditionViolated("rmf_residual needs at least three samples");
  const auto [first, last] = interior_range(x);
  const int i = std::clamp(index, first, last);
  const Vec3 du = central_difference(x, i, field.step(), [](const FrameSample& f) -> Vec3 { return f.u; });
  const Vec3 dv = central_difference(x, i, field.step(), [](const FrameSample& f) -> Vec3 { return f.v; });
  return std::abs(du.dot(x[i].v)) + std::abs(dv.dot(x[i].u));
}

double rmf_residual(const FrameField& field) {
  const auto x = field.samples();
  if (x.size() < 3) throw PreconditionViolated("rmf_residual needs at least three samples");
  const auto [first, last] = interior_range(x);
  double worst = 0.0;
  for (int i = first; i <= last; ++i) worst = std::max(worst, rmf_residual_at(field, i));
  return worst;
}

double theta_rate_residual(const FrameField& field) {
  const auto x = field.samples();
  if (!field.has_theta() || x.size() < 3) return kNaN;
  const auto [first, last] = interior_range(x);
  double worst = 0.0;
  for (int i = first; i <= last; ++i) {
    const double rate = central_difference(x, i, field.step(), [](const FrameSample& f) { return f.theta; });
    worst = std::max(worst, std::abs(rate + x[i].torsion));
  }
  return worst;
}

}  // namespace surfpen
