#include "surfpen/diagnostics.hpp"

#include <cmath>

namespace surfpen {

Diagnostics diagnose(const SurfacePatch& patch, const RuledPatch* ruled, const ConditionTolerances& tol) {
  Diagnostics out;
  out.conditions = check_conditions(patch, tol);
  out.normal_curvature = normal_curvature_along_curve(patch, tol.probes);
  if (ruled) out.classification = classify(*ruled);

  const FrameField& frame = patch.frame();
  const double first = frame.samples().front().s;
  out.rows.reserve(out.conditions.probes.size());
  for (std::size_t k = 0; k < out.conditions.probes.size(); ++k) {
    const ConditionProbe& p = out.conditions.probes[k];
    const Frame f = frame.at(p.s);
    DiagnosticsRow row;
    row.s = p.s;
    row.kappa = f.curvature;
    row.tau = f.torsion;
    row.theta = f.theta;
    row.rmf_residual = rmf_residual_at(frame, static_cast<int>(std::lround((p.s - first) / frame.step())));
    row.iso_residual = p.iso_residual;
    row.asym_residual = p.asym_residual;
    row.normal_curvature = out.normal_curvature.values[k];
    if (ruled) row.ruled_det = developability_determinant(*ruled, p.s);
    out.rows.push_back(row);
  }
  return out;
}

}  // namespace surfpen
