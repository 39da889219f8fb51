#include "surfpen/surface.hpp"

#include <cmath>

namespace surfpen::shapes {

FunctionSurface unit_cylinder(Rect domain) {
  return FunctionSurface([](double s, double t) { return Vec3(std::cos(s), std::sin(s), t); }, domain);
}

FunctionSurface unit_sphere(Rect domain) {
  return FunctionSurface(
      [](double s, double t) { return Vec3(std::cos(s) * std::cos(t), std::sin(s) * std::cos(t), std::sin(t)); },
      domain);
}

FunctionSurface xy_plane(Rect domain) {
  return FunctionSurface([](double s, double t) { return Vec3(s, t, 0.0); }, domain);
}

}  // namespace surfpen::shapes
