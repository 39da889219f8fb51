#include "surfpen/fixtures.hpp"

#include <numbers>
#include <stdexcept>

namespace surfpen::fixtures {

namespace {

constexpr double pi = std::numbers::pi;

Expr e(std::string_view text) { return parse(text); }

}  // namespace

Curve unit_circle() { return Curve::from_text("cos(s)", "sin(s)", "0", {0.0, 2.0 * pi}); }

Curve helix() { return Curve::from_text("3/5*sin(s)", "3/5*cos(s)", "4/5*s", {-pi, 0.0}); }

Curve y_helix() {
  return Curve::from_text("sqrt(3)/2*sin(s)", "s/2", "sqrt(3)/2*cos(s)", {-2.0 + kOpenEndOffset, 2.0});
}

double circle_theta0() { return pi / 2.0; }
double helix_theta0() { return 0.8 * helix().domain().lo; }
double y_helix_theta0() { return -0.5 * y_helix().domain().lo; }

const SurfacePatch& Example::patch() const {
  if (const auto* r = std::get_if<RuledPatch>(&surface)) return r->patch();
  return std::get<SurfacePatch>(surface);
}

Example build_example(std::string_view name, int frame_n, GridSize grid) {
  if (name == "p1") {
    const FrameField frame = rmf_by_theta(unit_circle(), circle_theta0(), frame_n);
    MarchingScale scale(e("0"), e("sin(t) - 1"), e("cos(t)"), pi / 2.0, {0.0, 2.0 * pi});
    return {"p1", "circle, b = sin t - 1, c = cos t, t0 = pi/2", SurfacePatch(frame, scale, grid)};
  }
  if (name == "p2") {
    const FrameField frame = rmf_by_theta(helix(), helix_theta0(), frame_n);
    MarchingScale scale(e("0"), e("exp(s)*t*cos(4*s/5)"), e("-exp(s)*t*sin(4*s/5)"), 0.0, {-1.0, 0.5});
    return {"p2", "helix, b = e^s t cos(4s/5), c = -e^s t sin(4s/5), t0 = 0", SurfacePatch(frame, scale, grid)};
  }
  if (name == "p3") {
    const FrameField frame = rmf_by_theta(helix(), helix_theta0(), frame_n);
    return {"p3", "helix, ruled with g = 0, t0 = 0",
            build_ruled(frame, e("0"), 0.0, frame.curve().domain(), {-1.0, 0.5}, grid)};
  }
  if (name == "p4") {
    const FrameField frame = rmf_by_theta(y_helix(), y_helix_theta0(), frame_n);
    MarchingScale scale(e("0"), e("s^2*t"), e("s^2*t*tan(s/2)"), 0.0, {-1.0, 1.0});
    return {"p4", "y-helix, b = s^2 t, c = s^2 t tan(s/2), t0 = 0", SurfacePatch(frame, scale, grid)};
  }
  if (name == "p5" || name == "p6") {
    const FrameField frame = rmf_by_theta(y_helix(), y_helix_theta0(), frame_n);
    const bool five = name == "p5";
    const Expr g = five ? e("cos(s)") : e("cos(s)*sin(s)");
    return {std::string(name), five ? "y-helix, ruled with g = cos s, t0 = 0" : "y-helix, ruled with g = cos s sin s, t0 = 0",
            build_ruled(frame, g, 0.0, frame.curve().domain(), {-1.0, 1.0}, grid)};
  }
  throw std::invalid_argument("unknown example '" + std::string(name) + "' (expected p1..p6)");
}

}  // namespace surfpen::fixtures
