#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "surfpen/diagnostics.hpp"
#include "surfpen/fixtures.hpp"

namespace surfpen::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 2,
  kConfigError = 3,
};

/// Isolated degenerate-normal probes tolerated along the curve before a run fails.
inline constexpr int kMaxDegenerateProbes = 2;
inline constexpr double kNormalCurvatureTolerance = 1e-5;

struct RunConfig {
  /// example | build | ruled | check
  std::string subcommand;
  /// Example name or definition file path.
  std::string target;
  std::optional<std::string> obj_path;
  std::optional<std::string> csv_path;
  std::optional<int> ns;
  std::optional<int> nt;
  int frame_n = kDefaultFrameResolution;
  int curve_probes = kDefaultCurveProbes;
  ConditionTolerances tolerances;
};

/// Outcome of evaluating and checking one surface.
struct Evaluation {
  std::string name;
  std::string description;
  Diagnostics diagnostics;
  /// Names of failed checks, in evaluation order.
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// Runs the full check suite on a pencil member (ruled may be null).
Evaluation evaluate(const std::string& name, const std::string& description, const SurfacePatch& patch,
                    const RuledPatch* ruled, const ConditionTolerances& tol);

/// Builds reference surface p1..p6 and evaluates it.
Evaluation run_example(const fixtures::Example& example, const ConditionTolerances& tol = {});

/// Executes one command; returns the process exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs; usage errors map to kConfigError.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace surfpen::cli
