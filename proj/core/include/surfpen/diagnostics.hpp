#pragma once

#include <optional>
#include <vector>

#include "surfpen/pencil.hpp"
#include "surfpen/ruled.hpp"
#include "surfpen/verify.hpp"

namespace surfpen {

/// Per-probe record written to the diagnostics CSV. NaN means "not applicable".
struct DiagnosticsRow {
  double s = 0.0;
  double kappa = 0.0;
  double tau = 0.0;
  double theta = 0.0;
  double rmf_residual = 0.0;
  double iso_residual = 0.0;
  double asym_residual = 0.0;
  double normal_curvature = 0.0;
  std::optional<double> ruled_det;
};

struct Diagnostics {
  ConditionReport conditions;
  NormalCurvatureReport normal_curvature;
  std::optional<RuledClassification> classification;
  std::vector<DiagnosticsRow> rows;
};

/// Runs the condition checks, the finite-difference normal curvature along
/// t = t0 and, for ruled patches, the developability classification, on the
/// same s-probe.
Diagnostics diagnose(const SurfacePatch& patch, const RuledPatch* ruled = nullptr,
                     const ConditionTolerances& tol = {});

}  // namespace surfpen
