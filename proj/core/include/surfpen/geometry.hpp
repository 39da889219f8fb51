#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace surfpen {

using Vec3 = Eigen::Vector3d;

/// Closed parameter interval [lo, hi].
struct Interval {
  double lo = 0.0;
  double hi = 1.0;

  double length() const { return hi - lo; }
  bool contains(double x, double slack = 0.0) const { return x >= lo - slack && x <= hi + slack; }
  /// Point i of n uniformly spaced points including both ends (n >= 2).
  double uniform(int i, int n) const {
    return i == n - 1 ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
};

/// Parameter rectangle of a surface.
struct Rect {
  Interval s;
  Interval t;
};

}  // namespace surfpen
