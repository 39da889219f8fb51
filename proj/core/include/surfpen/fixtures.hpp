#pragma once

#include <array>
#include <string>
#include <string_view>
#include <variant>

#include "surfpen/curve.hpp"
#include "surfpen/pencil.hpp"
#include "surfpen/ruled.hpp"

namespace surfpen::fixtures {

/// (cos s, sin s, 0) on [0, 2 pi]; kappa = 1, tau = 0.
Curve unit_circle();
/// (3/5 sin s, 3/5 cos s, 4/5 s) on [-pi, 0]; kappa = 3/5, tau = -4/5.
Curve helix();
/// (sqrt3/2 sin s, s/2, sqrt3/2 cos s) on (-2, 2], realised as [-2 + 1e-6, 2].
Curve y_helix();

/// Lower end used for the half-open interval (-2, 2].
inline constexpr double kOpenEndOffset = 1e-6;

/// theta(L1) making theta = pi/2, 4s/5 and -s/2 respectively.
double circle_theta0();
double helix_theta0();
double y_helix_theta0();

inline constexpr std::array<std::string_view, 6> kExampleNames{"p1", "p2", "p3", "p4", "p5", "p6"};

struct Example {
  std::string name;
  std::string description;
  std::variant<SurfacePatch, RuledPatch> surface;

  const SurfacePatch& patch() const;
  /// nullptr for non-ruled examples.
  const RuledPatch* ruled() const { return std::get_if<RuledPatch>(&surface); }
};

/// Builds one of the six reference surfaces p1..p6. Throws std::invalid_argument
/// for an unknown name.
Example build_example(std::string_view name, int frame_n = kDefaultFrameResolution, GridSize grid = {});

}  // namespace surfpen::fixtures
