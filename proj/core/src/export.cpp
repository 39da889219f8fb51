#include "surfpen/export.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include "surfpen/error.hpp"

namespace surfpen {

namespace {

std::string fixed9(double v) {
  std::array<char, 64> buf{};
  const int len = std::snprintf(buf.data(), buf.size(), "%.9f", v);
  std::string out(buf.data(), static_cast<std::size_t>(len));
  if (out == "-0.000000000") out.erase(0, 1);
  return out;
}

std::string shortest(double v) {
  if (std::isnan(v)) return {};
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

std::ofstream open_for_write(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  return out;
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw Error("failed writing '" + path + "'");
}

}  // namespace

void write_obj(std::ostream& out, const Surface& surface, GridSize grid) {
  if (grid.ns < 2 || grid.nt < 2) throw PreconditionViolated("OBJ export needs at least a 2 x 2 grid");
  const Rect r = surface.domain();
  for (int i = 0; i < grid.ns; ++i) {
    const double s = r.s.uniform(i, grid.ns);
    for (int j = 0; j < grid.nt; ++j) {
      const double t = r.t.uniform(j, grid.nt);
      const Vec3 p = surface.point(s, t);
      if (!p.allFinite()) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "non-finite surface point at (s, t) = (" << s << ", " << t << ")";
        throw Error(msg.str());
      }
      out << "v " << fixed9(p.x()) << ' ' << fixed9(p.y()) << ' ' << fixed9(p.z()) << '\n';
    }
  }
  const auto index = [&](int i, int j) { return static_cast<long>(i) * grid.nt + j + 1; };
  for (int i = 0; i + 1 < grid.ns; ++i) {
    for (int j = 0; j + 1 < grid.nt; ++j) {
      out << "f " << index(i, j) << ' ' << index(i, j + 1) << ' ' << index(i + 1, j + 1) << ' ' << index(i + 1, j)
          << '\n';
    }
  }
}

void export_obj(const Surface& surface, GridSize grid, const std::string& path) {
  // Build in memory first so a failed evaluation leaves no partial file behind.
  std::ostringstream buf;
  write_obj(buf, surface, grid);
  auto out = open_for_write(path);
  out << buf.str();
  finish(out, path);
}

void write_csv(std::ostream& out, std::span<const DiagnosticsRow> rows) {
  out << kDiagnosticsHeader << '\n';
  for (const auto& r : rows) {
    out << shortest(r.s) << ',' << shortest(r.kappa) << ',' << shortest(r.tau) << ',' << shortest(r.theta) << ','
        << shortest(r.rmf_residual) << ',' << shortest(r.iso_residual) << ',' << shortest(r.asym_residual) << ','
        << shortest(r.normal_curvature) << ',' << (r.ruled_det ? shortest(*r.ruled_det) : std::string()) << '\n';
  }
}

void export_csv(std::span<const DiagnosticsRow> rows, const std::string& path) {
  auto out = open_for_write(path);
  write_csv(out, rows);
  finish(out, path);
}

}  // namespace surfpen
