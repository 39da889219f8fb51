#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "surfpen/diagnostics.hpp"
#include "surfpen/pencil.hpp"
#include "surfpen/surface.hpp"

namespace surfpen {

inline constexpr const char* kDiagnosticsHeader =
    "s,kappa,tau,theta,rmf_residual,iso_residual,asym_residual,normal_curvature,ruled_det";

/// Quad mesh of the ns x nt node grid (s-major, both ends included):
/// `v x y z` per node with 9 digits after the decimal point, then
/// `f i j k l` per cell with 1-based indices. Throws Error naming (s, t) on a
/// non-finite coordinate.
void write_obj(std::ostream& out, const Surface& surface, GridSize grid);
void export_obj(const Surface& surface, GridSize grid, const std::string& path);
inline void export_obj(const SurfacePatch& patch, const std::string& path) {
  export_obj(patch, patch.grid(), path);
}

/// One row per probe; non-applicable values are written as empty fields.
void write_csv(std::ostream& out, std::span<const DiagnosticsRow> rows);
void export_csv(std::span<const DiagnosticsRow> rows, const std::string& path);

}  // namespace surfpen
