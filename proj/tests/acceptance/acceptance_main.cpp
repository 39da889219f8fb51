// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance                 run every criterion
//   acceptance --criterion N   run criterion N only (exit status 1 on FAIL)

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "closed_forms.hpp"
#include "oracles.hpp"
#include "surfpen/error.hpp"
#include "surfpen/fixtures.hpp"
#include "surfpen/frames.hpp"
#include "surfpen/pencil.hpp"
#include "surfpen/ruled.hpp"
#include "surfpen/verify.hpp"

using namespace surfpen;
using closed_form::kPi;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  // records a measured quantity against its bound
  void bound(const std::string& what, double value, double limit, bool at_least = false) {
    const bool ok = at_least ? value >= limit : value <= limit;
    char line[256];
    std::snprintf(line, sizeof line, "%-52s %11.3e %s %.0e  %s", what.c_str(), value, at_least ? ">=" : "<=", limit,
                  ok ? "ok" : "VIOLATED");
    notes.emplace_back(line);
    pass = pass && ok;
  }
  void check(const std::string& what, bool ok) {
    notes.push_back(what + (ok ? "  ok" : "  VIOLATED"));
    pass = pass && ok;
  }
  void note(const std::string& what) { notes.push_back(what); }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct ReferenceCurve {
  const char* name;
  Curve curve;
  double theta0;
  double kappa;
  double tau;
  closed_form::Frame (*frame)(double);
  double (*theta)(double);
};

std::vector<ReferenceCurve> reference_curves() {
  return {{"circle", fixtures::unit_circle(), fixtures::circle_theta0(), 1.0, 0.0, closed_form::circle,
           [](double) { return kPi / 2; }},
          {"helix", fixtures::helix(), fixtures::helix_theta0(), 0.6, -0.8, closed_form::helix,
           [](double s) { return 0.8 * s; }},
          {"y-helix", fixtures::y_helix(), fixtures::y_helix_theta0(), closed_form::kHalfRoot3, -0.5,
           closed_form::y_helix, [](double s) { return -s / 2; }}};
}

using SurfaceFn = Vec3 (*)(double, double);

struct ReferenceSurface {
  const char* name;
  SurfaceFn construction;
};

const ReferenceSurface kSurfaces[] = {{"p1", closed_form::printed::p1}, {"p2", closed_form::p2},
                                      {"p3", closed_form::p3},          {"p4", closed_form::p4},
                                      {"p5", closed_form::p5},          {"p6", closed_form::p6}};

// 1. curvature and torsion of the three reference curves
Outcome criterion_1() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& c : reference_curves()) {
    double dk = 0, dt = 0, tau_seen = 0;
    for (int i = 0; i < 200; ++i) {
      const auto kt = curvature_torsion(c.curve, c.curve.domain().uniform(i, 200));
      dk = std::max(dk, std::abs(kt.curvature - c.kappa));
      dt = std::max(dt, std::abs(kt.torsion - c.tau));
      tau_seen = kt.torsion;
    }
    char label[96];
    std::snprintf(label, sizeof label, "%s: max |kappa - %.6g|", c.name, c.kappa);
    o.bound(label, dk, 1e-9);
    std::snprintf(label, sizeof label, "%s: max |tau - (%.6g)|", c.name, c.tau);
    o.bound(label, dt, 1e-9);
    if (dt > 1e-9) {
      char line[160];
      std::snprintf(line, sizeof line, "  %s: computed torsion is %+.12f at every probe", c.name, tau_seen);
      o.note(line);
    }
  }
  o.bound("runtime [s]", seconds_since(start), 1.0);
  return o;
}

// 2. theta from RK4 and the closed-form U, V columns
Outcome criterion_2() {
  Outcome o;
  for (const auto& c : reference_curves()) {
    if (std::string(c.name) == "circle") continue;
    const auto field = rmf_by_theta(c.curve, c.theta0, 512);
    double dtheta = 0, duv = 0;
    for (const auto& x : field.samples()) {
      dtheta = std::max(dtheta, std::abs(x.theta - c.theta(x.s)));
      const auto want = c.frame(x.s);
      duv = std::max({duv, (x.u - want.u).lpNorm<Eigen::Infinity>(), (x.v - want.v).lpNorm<Eigen::Infinity>()});
    }
    o.bound(std::string(c.name) + ": max |theta - closed form| (n=512)", dtheta, 1e-8);
    o.bound(std::string(c.name) + ": max componentwise |U,V - closed form|", duv, 1e-6);
  }
  return o;
}

// 3. RMF residual, its convergence order, and agreement with double reflection
Outcome criterion_3() {
  Outcome o;
  constexpr double kFloor = 1e-12;
  for (const auto& c : reference_curves()) {
    const double r512 = rmf_residual(rmf_by_theta(c.curve, c.theta0, 512));
    const double r1024 = rmf_residual(rmf_by_theta(c.curve, c.theta0, 1024));
    o.bound(std::string(c.name) + ": rmf residual (n=512)", r512, 1e-5);
    if (r512 <= kFloor) {
      char line[160];
      std::snprintf(line, sizeof line, "%s: residual already at round-off (%.1e, %.1e), order check vacuous", c.name,
                    r512, r1024);
      o.note(line);
    } else {
      o.bound(std::string(c.name) + ": residual ratio n=512 / n=1024", r512 / r1024, 4.0, true);
    }
    const auto a = rmf_by_theta(c.curve, c.theta0, 2048);
    const auto b = rmf_double_reflection(c.curve, a.samples().front().u, 2048);
    double angle = 0;
    for (std::size_t i = 0; i < a.samples().size(); ++i) {
      angle = std::max(angle, oracle::angle_between(a.samples()[i].u, b.samples()[i].u));
    }
    o.bound(std::string(c.name) + ": theta path vs double reflection [rad]", angle, 1e-5);
  }
  return o;
}

// 4. grid nodes against the closed-form surfaces, plus printed expansions
Outcome criterion_4() {
  Outcome o;
  for (const auto& ref : kSurfaces) {
    const auto ex = fixtures::build_example(ref.name);
    const SurfacePatch& p = ex.patch();
    const auto grid = p.evaluate_grid();
    double worst = 0;
    for (int i = 0; i < p.grid().ns; ++i) {
      for (int j = 0; j < p.grid().nt; ++j) {
        const Vec3 want = ref.construction(p.grid_s(i), p.grid_t(j));
        worst = std::max(worst, (grid[static_cast<std::size_t>(i) * p.grid().nt + j] - want).norm());
      }
    }
    o.bound(std::string(ref.name) + ": max grid deviation, 200x50 nodes", worst, 1e-8);
  }

  // ten hand-picked nodes per surface, inside each rectangle
  const double s_circle[] = {0.0, 0.4, 1.1, 1.9, 2.5, 3.2, 4.0, 4.7, 5.5, 6.2};
  const double s_helix[] = {-3.1, -2.8, -2.4, -2.0, -1.6, -1.2, -0.9, -0.5, -0.2, 0.0};
  const double s_yhelix[] = {-1.9, -1.5, -1.1, -0.7, -0.3, 0.1, 0.5, 0.9, 1.4, 2.0};
  const double t_circle[] = {0.0, 0.7, 1.3, 1.9, 2.6, 3.1, 3.8, 4.5, 5.2, 6.2};
  const double t_half[] = {-1.0, -0.8, -0.6, -0.4, -0.2, 0.0, 0.1, 0.25, 0.4, 0.5};
  const double t_unit[] = {-1.0, -0.75, -0.5, -0.3, -0.1, 0.1, 0.3, 0.55, 0.8, 1.0};

  struct Spot {
    const char* name;
    const double* s;
    const double* t;
    std::function<Vec3(double, double)> printed;
  };
  const Spot spots[] = {
      {"p1", s_circle, t_circle, closed_form::printed::p1},
      {"p2", s_helix, t_half, closed_form::printed::p2},
      {"p3", s_helix, t_half, closed_form::printed::p3},
      {"p4", s_yhelix, t_unit, [](double s, double t) { return closed_form::printed::p4(s, t, true); }},
      {"p5", s_yhelix, t_unit, closed_form::printed::p5},
      {"p6", s_yhelix, t_unit, [](double s, double t) { return closed_form::printed::p6(s, t, true); }},
  };
  for (const auto& sp : spots) {
    const auto ex = fixtures::build_example(sp.name);
    double worst = 0;
    for (int k = 0; k < 10; ++k) worst = std::max(worst, (ex.patch().point(sp.s[k], sp.t[k]) - sp.printed(sp.s[k], sp.t[k])).norm());
    o.bound(std::string(sp.name) + ": printed expansion, 10 spot nodes", worst, 1e-8);
  }

  // the two misprinted terms, as printed
  double p4_raw = 0, p6_raw = 0;
  for (int k = 0; k < 10; ++k) {
    p4_raw = std::max(p4_raw, (closed_form::printed::p4(s_yhelix[k], t_unit[k], false) -
                               closed_form::printed::p4(s_yhelix[k], t_unit[k], true)).norm());
    p6_raw = std::max(p6_raw, (closed_form::printed::p6(s_yhelix[k], t_unit[k], false) -
                               closed_form::printed::p6(s_yhelix[k], t_unit[k], true)).norm());
  }
  char line[200];
  std::snprintf(line, sizeof line, "p4 x term read as -3cos(s/2) (as printed +3cos(s/2) is off by up to %.3f)", p4_raw);
  o.note(line);
  std::snprintf(line, sizeof line, "p6 x term read as cos^2(s)sin(s) (as printed cos(s)sin(s) is off by up to %.3f)",
                p6_raw);
  o.note(line);
  return o;
}

// 5. isoparametric + asymptotic conditions and vanishing normal curvature
Outcome criterion_5() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& ref : kSurfaces) {
    const auto ex = fixtures::build_example(ref.name, kDefaultFrameResolution, {200, 50});
    const auto grid = ex.patch().evaluate_grid();
    const auto r = check_conditions(ex.patch());
    const auto kn = normal_curvature_along_curve(ex.patch(), 200);
    o.bound(std::string(ref.name) + ": isoparametric residual", r.iso_residual, 1e-8);
    o.bound(std::string(ref.name) + ": asymptotic residual", r.asym_residual, 1e-7);
    o.bound(std::string(ref.name) + ": max |k_n| along t = t0 (200 probes)", kn.max_abs, 1e-5);
    o.check(std::string(ref.name) + ": grid of " + std::to_string(grid.size()) + " nodes, " +
                std::to_string(kn.degenerate) + " degenerate probes",
            grid.size() == 10000 && kn.degenerate <= 2);
  }
  o.bound("runtime [s]", seconds_since(start), 10.0);
  return o;
}

// 6. det(r', d, d') = tau and the developable/plane classification
Outcome criterion_6() {
  Outcome o;
  oracle::ExprGenerator gen(6);
  double worst = 0;
  for (int k = 0; k < 20; ++k) {
    const Expr g = oracle::random_ruling(gen);
    const double theta0 = gen.uniform(-kPi, kPi);
    for (const auto& c : reference_curves()) {
      const RuledPatch p = build_ruled(rmf_by_theta(c.curve, theta0, 512), g, 0.0, c.curve.domain(), {-1, 1});
      for (int i = 0; i < 50; ++i) {
        const double s = c.curve.domain().uniform(i, 50);
        worst = std::max(worst, std::abs(developability_determinant(p, s) - curvature_torsion(c.curve, s).torsion));
      }
    }
  }
  o.bound("max |det(r', d, d') - tau|, 20 g x 3 curves x 50 s", worst, 1e-6);

  const RuledPatch circle =
      build_ruled(rmf_by_theta(fixtures::unit_circle(), gen.uniform(-kPi, kPi), 512), oracle::random_ruling(gen), 0.0,
                  fixtures::unit_circle().domain(), {-0.5, 0.5});
  const auto cc = classify(circle);
  o.check("circle ruled patch: planar, developable, plane = true, true, true", cc.planar_curve && cc.developable && cc.plane);
  for (const char* name : {"p3", "p5", "p6"}) {
    const auto c = classify(*fixtures::build_example(name).ruled());
    o.check(std::string(name) + ": planar, developable, plane = false, false, false",
            !c.planar_curve && !c.developable && !c.plane);
  }
  return o;
}

// 7. closed-form normal against differenced normal; K of ruled members
Outcome criterion_7() {
  Outcome o;
  for (const auto& ref : kSurfaces) {
    const auto ex = fixtures::build_example(ref.name);
    const SurfacePatch& p = ex.patch();
    double worst = 0;
    int skipped = 0;
    for (int i = 0; i < 20; ++i) {
      for (int j = 0; j < 20; ++j) {
        const double s = interior_point(p.domain().s, i, 20), t = interior_point(p.domain().t, j, 20);
        const auto n = closed_form_normal(p, s, t);
        const Vec3 fd = oracle::cross_normal(p, s, t);
        if (n.degenerate || fd.norm() < kDegenerateNormal) {
          ++skipped;
          continue;
        }
        worst = std::max(worst, oracle::angle_between(n.vector, fd));
      }
    }
    o.bound(std::string(ref.name) + ": max normal angle, interior 20x20 [rad]", worst, 1e-4);
    if (skipped) o.note("  " + std::to_string(skipped) + " degenerate samples skipped");
  }
  for (const char* name : {"p3", "p5", "p6"}) {
    const auto k = gaussian_curvature_grid(*fixtures::build_example(name).ruled(), 20, 20);
    o.bound(std::string(name) + ": max Gaussian curvature, interior 20x20", k.max, 1e-8);
  }
  return o;
}

// 8. negative control: perturbed c on the circle example
Outcome criterion_8() {
  Outcome o;
  auto frame = rmf_by_theta(fixtures::unit_circle(), fixtures::circle_theta0(), kDefaultFrameResolution);
  MarchingScale scale(ScaleTerm(), ScaleTerm(parse("sin(t) - 1")), ScaleTerm(parse("cos(t) + 0.1*(t - pi/2)")),
                      kPi / 2, {0, 2 * kPi});
  const SurfacePatch p(std::move(frame), std::move(scale));
  const auto r = check_conditions(p);
  const auto kn = normal_curvature_along_curve(p, 200);
  o.check("isoparametric stays true", r.isoparametric);
  o.bound("asymptotic residual", r.asym_residual, 1e-2, true);
  o.bound("max |k_n| along t = t0", kn.max_abs, 1e-3, true);
  o.check("checker rejects the patch", !r.asymptotic);
  if (!o.pass) {
    // with theta = pi/2 the condition involves b_t only; c_t just rescales n along B
    const auto n = closed_form_normal(p, 1.0, kPi / 2);
    char line[200];
    std::snprintf(line, sizeof line, "  n(1, t0) in (T, U, V) = (%.3g, %.3g, %.3g), U = B: curve is still asymptotic",
                  n.components.x(), n.components.y(), n.components.z());
    o.note(line);
  }
  return o;
}

// 9. expression derivatives and parser diagnostics
Outcome criterion_9() {
  Outcome o;
  oracle::ExprGenerator gen(9009);
  int checked = 0, attempts = 0;
  double worst = 0;
  while (checked < 200 && attempts < 20000) {
    ++attempts;
    const Expr e = gen.tree(6);
    const Var v = (attempts % 2) ? Var::s : Var::t;
    const double s = gen.uniform(-1, 1), t = gen.uniform(-1, 1);
    const auto margin = oracle::domain_margin(e, s, t);
    if (!margin || *margin < 0.05 || std::abs(e.eval(s, t)) > 1e3) continue;
    double exact = 0;
    try {
      exact = differentiate(e, v).eval(s, t);
    } catch (const DomainError&) {
      continue;
    }
    if (std::abs(exact) > 1e3) continue;
    worst = std::max(worst, std::abs(exact - oracle::partial(e, v, s, t)) / (1 + std::abs(exact)));
    ++checked;
  }
  o.check(std::to_string(checked) + " random trees differentiated", checked == 200);
  o.bound("max relative error vs central difference (h=1e-5)", worst, 1e-5);

  struct Bad {
    const char* text;
    std::size_t offset;
  };
  const Bad bad[] = {{"", 0},     {"sin(s", 5}, {"s +", 3},  {"foo(s)", 0}, {"s^t", 2},
                     {"2 * * s", 4}, {"(s))", 3}, {"s t", 2}, {"1.2.3", 3}, {"sin s", 4}};
  int positioned = 0;
  for (const auto& b : bad) {
    try {
      parse(b.text);
    } catch (const ParseError& e) {
      if (e.offset() == b.offset) ++positioned;
    }
  }
  o.check(std::to_string(positioned) + "/10 malformed inputs rejected at the expected offset", positioned == 10);
  return o;
}

struct Criterion {
  const char* title;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {"Frenet data of the reference curves", criterion_1},
    {"theta recovery and closed-form frames", criterion_2},
    {"RMF residual, convergence order, double reflection", criterion_3},
    {"surfaces p1..p6 against closed forms", criterion_4},
    {"condition suite on p1..p6", criterion_5},
    {"developability", criterion_6},
    {"closed-form vs differenced normals, ruled K", criterion_7},
    {"negative control: perturbed c", criterion_8},
    {"expression subsystem", criterion_9},
};

bool run_one(int n) {
  const Criterion& c = kCriteria[n - 1];
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o.pass = false;
    o.note(std::string("exception: ") + e.what());
  }
  std::printf("criterion %d: %s  %s\n", n, o.pass ? "PASS" : "FAIL", c.title);
  for (const auto& line : o.notes) std::printf("    %s\n", line.c_str());
  std::fflush(stdout);
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      which.push_back(std::atoi(argv[++i]));
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]...\n", argv[0]);
      return 2;
    }
  }
  if (which.empty()) {
    for (int n = 1; n <= 9; ++n) which.push_back(n);
  }
  bool all = true;
  for (int n : which) {
    if (n < 1 || n > 9) {
      std::fprintf(stderr, "no criterion %d\n", n);
      return 2;
    }
    all = run_one(n) && all;
  }
  return all ? 0 : 1;
}
