#pragma once

#include <optional>

#include "surfpen/keyvalue.hpp"
#include "surfpen/pencil.hpp"
#include "surfpen/ruled.hpp"

namespace surfpen {

/// Settings that may override a definition file.
struct LoadOptions {
  int frame_n = kDefaultFrameResolution;
  std::optional<int> ns;
  std::optional<int> nt;
  int curve_probes = kDefaultCurveProbes;
};

/// Pencil member from a definition file: the curve keys (x, y, z, s_min,
/// s_max) plus t0, t_min, t_max, optional theta0 (default 0), ns, nt and
/// either `a`, `b`, `c` (each defaulting to 0) or `f` with optional `a`.
/// Every failure is reported as ConfigError.
SurfacePatch load_patch(const KeyValueFile& file, const LoadOptions& options = {});

/// Ruled member: curve keys plus `g`, t0, t_min, t_max, theta0, ns, nt.
RuledPatch load_ruled(const KeyValueFile& file, const LoadOptions& options = {});

}  // namespace surfpen
