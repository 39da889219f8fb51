#include "surfpen/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "surfpen/pencil.hpp"

namespace surfpen {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kDegenerateArea = 1e-14;

struct Tap {
  int offset;
  double weight;
};

// Stencil weights (to be divided by h or h^2) that stay inside [lo, hi].
struct Stencil {
  std::array<Tap, 4> first{};
  int first_size = 0;
  std::array<Tap, 4> second{};
  int second_size = 0;
};

Stencil stencil_for(double x, double h, const Interval& d) {
  Stencil st;
  const bool fits_low = x - h >= d.lo - 1e-15;
  const bool fits_high = x + h <= d.hi + 1e-15;
  if (fits_low && fits_high) {
    st.first = {{{-1, -0.5}, {1, 0.5}}};
    st.first_size = 2;
    st.second = {{{-1, 1.0}, {0, -2.0}, {1, 1.0}}};
    st.second_size = 3;
  } else if (fits_high) {
    st.first = {{{0, -1.5}, {1, 2.0}, {2, -0.5}}};
    st.first_size = 3;
    st.second = {{{0, 2.0}, {1, -5.0}, {2, 4.0}, {3, -1.0}}};
    st.second_size = 4;
  } else {
    st.first = {{{0, 1.5}, {-1, -2.0}, {-2, 0.5}}};
    st.first_size = 3;
    st.second = {{{0, 2.0}, {-1, -5.0}, {-2, 4.0}, {-3, -1.0}}};
    st.second_size = 4;
  }
  return st;
}

struct Partials {
  Vec3 ps, pt, pss, ptt, pst;
};

Partials partials(const Surface& surface, double s, double t, double h, bool second) {
  const Rect r = surface.domain();
  const Stencil ss = stencil_for(s, h, r.s);
  const Stencil ts = stencil_for(t, h, r.t);
  auto P = [&](int i, int j) { return surface.point(s + i * h, t + j * h); };

  Partials p;
  p.ps = p.pt = p.pss = p.ptt = p.pst = Vec3::Zero();
  for (int k = 0; k < ss.first_size; ++k) p.ps += ss.first[k].weight * P(ss.first[k].offset, 0);
  for (int k = 0; k < ts.first_size; ++k) p.pt += ts.first[k].weight * P(0, ts.first[k].offset);
  p.ps /= h;
  p.pt /= h;
  if (!second) return p;

  for (int k = 0; k < ss.second_size; ++k) p.pss += ss.second[k].weight * P(ss.second[k].offset, 0);
  for (int k = 0; k < ts.second_size; ++k) p.ptt += ts.second[k].weight * P(0, ts.second[k].offset);
  for (int a = 0; a < ss.first_size; ++a) {
    for (int b = 0; b < ts.first_size; ++b) {
      p.pst += ss.first[a].weight * ts.first[b].weight * P(ss.first[a].offset, ts.first[b].offset);
    }
  }
  p.pss /= h * h;
  p.ptt /= h * h;
  p.pst /= h * h;
  return p;
}

}  // namespace

FundamentalForms fundamental_forms(const Surface& surface, double s, double t, double h) {
  const Partials p = partials(surface, s, t, h, true);
  FundamentalForms f;
  f.E = p.ps.dot(p.ps);
  f.F = p.ps.dot(p.pt);
  f.G = p.pt.dot(p.pt);
  const double area = f.E * f.G - f.F * f.F;
  if (area < kDegenerateArea) {
    f.degenerate = true;
    f.gaussian_curvature = kNaN;
    return f;
  }
  f.unit_normal = p.ps.cross(p.pt) / std::sqrt(area);
  f.L = p.pss.dot(f.unit_normal);
  f.M = p.pst.dot(f.unit_normal);
  f.N = p.ptt.dot(f.unit_normal);
  f.gaussian_curvature = (f.L * f.N - f.M * f.M) / area;
  return f;
}

Vec3 numeric_unit_normal(const Surface& surface, double s, double t, double h) {
  const Partials p = partials(surface, s, t, h, false);
  const Vec3 n = p.ps.cross(p.pt);
  const double area2 = n.squaredNorm();
  if (area2 < kDegenerateArea) return Vec3::Zero();
  return n / std::sqrt(area2);
}

NormalCurvatureReport normal_curvature_along_curve(const Surface& surface, double t0,
                                                   const std::function<Vec3(double)>& second_derivative,
                                                   int probes) {
  probes = std::max(probes, 2);
  NormalCurvatureReport report;
  const Interval s_range = surface.domain().s;
  for (int i = 0; i < probes; ++i) {
    const double s = s_range.uniform(i, probes);
    const Vec3 n = numeric_unit_normal(surface, s, t0);
    report.s.push_back(s);
    if (n.isZero()) {
      report.values.push_back(kNaN);
      ++report.degenerate;
      continue;
    }
    const double kn = n.dot(second_derivative(s));
    report.values.push_back(kn);
    report.max_abs = std::max(report.max_abs, std::abs(kn));
  }
  return report;
}

NormalCurvatureReport normal_curvature_along_curve(const SurfacePatch& patch, int probes) {
  const Curve& curve = patch.curve();
  return normal_curvature_along_curve(patch, patch.t0(), [&](double s) { return curve.derivative(s, 2); }, probes);
}

CurvatureGrid gaussian_curvature_grid(const Surface& surface, int ns, int nt) {
  CurvatureGrid grid;
  grid.ns = ns;
  grid.nt = nt;
  grid.min = INFINITY;
  grid.max = -INFINITY;
  const Rect r = surface.domain();
  grid.values.reserve(static_cast<std::size_t>(ns) * nt);
  for (int i = 0; i < ns; ++i) {
    for (int j = 0; j < nt; ++j) {
      const auto f = fundamental_forms(surface, interior_point(r.s, i, ns), interior_point(r.t, j, nt));
      grid.values.push_back(f.gaussian_curvature);
      if (f.degenerate) {
        ++grid.degenerate;
        continue;
      }
      grid.min = std::min(grid.min, f.gaussian_curvature);
      grid.max = std::max(grid.max, f.gaussian_curvature);
    }
  }
  return grid;
}

}  // namespace surfpen
