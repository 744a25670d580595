#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace rolling {

/// Process exit statuses of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 1,
  kExitRuntime = 2,
  kExitMismatch = 3,
};

struct SimulateOptions {
  bool reduced = false;
  std::optional<std::string> gnuplot_path;
};

int cmd_simulate(const std::string& scenario_path, const std::string& output_path,
                 const SimulateOptions& options, std::ostream& out, std::ostream& err);

struct CompareOptions {
  std::optional<std::string> gnuplot_path;
  double tolerance = 1e-6;
  /// Test hook: scales gravity of the reduced run only.
  double reduced_gravity_scale = 1.0;
};

/// Integrates the full and the SE(2)-reduced system from the same initial
/// data and reports their per-sample deviation.
int cmd_compare(const std::string& scenario_path, const std::string& output_path,
                const CompareOptions& options, std::ostream& out, std::ostream& err);

struct CheckOptions {
  std::uint64_t seed = 20240601;
  /// Test hook: flips the sign of the gravity torque in dOmega/dt.
  bool corrupt_gravity_torque = false;
};

/// Runs the invariant suite and prints one PASS/FAIL line per family.
int cmd_check(const CheckOptions& options, std::ostream& out);

}  // namespace rolling
