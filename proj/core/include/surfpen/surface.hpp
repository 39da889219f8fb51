#pragma once

#include <functional>

#include "surfpen/geometry.hpp"

namespace surfpen {

/// Parametric surface P(s, t) over a rectangle.
class Surface {
 public:
  virtual ~Surface() = default;

  virtual Vec3 point(double s, double t) const = 0;
  virtual Rect domain() const = 0;
};

/// Surface given by a callable; used for reference shapes and tests.
class FunctionSurface final : public Surface {
 public:
  using Map = std::function<Vec3(double, double)>;

  FunctionSurface(Map map, Rect domain) : map_(std::move(map)), domain_(domain) {}

  Vec3 point(double s, double t) const override { return map_(s, t); }
  Rect domain() const override { return domain_; }

 private:
  Map map_;
  Rect domain_;
};

namespace shapes {

/// (cos s, sin s, t)
FunctionSurface unit_cylinder(Rect domain);
/// (cos s cos t, sin s cos t, sin t), t latitude
FunctionSurface unit_sphere(Rect domain);
/// (s, t, 0)
FunctionSurface xy_plane(Rect domain);

}  // namespace shapes

}  // namespace surfpen
