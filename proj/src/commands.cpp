#include "rolling/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <vector>

#include <Eigen/Cholesky>

#include "rolling/batch.hpp"
#include "rolling/output.hpp"
#include "rolling/sampling.hpp"
#include "rolling/scenario.hpp"

namespace rolling {

namespace {

bool emit_gnuplot(const std::optional<std::string>& path, const std::string& csv_path,
                  const std::string& header, std::ostream& err) {
  if (!path) return true;
  std::ofstream g(*path, std::ios::binary);
  if (!g) {
    err << "error: cannot write gnuplot script " << *path << '\n';
    return false;
  }
  g << gnuplot_script(csv_path, header);
  return true;
}

std::optional<std::ofstream> open_output(const std::string& path, std::ostream& err) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    err << "error: cannot open output file " << path << '\n';
    return std::nullopt;
  }
  return out;
}

void report_termination(const Termination& t, std::ostream& err) {
  err << "error: integration terminated at t=" << format_double(t.time) << ": " << t.message
      << '\n';
}

}  // namespace

int cmd_simulate(const std::string& scenario_path, const std::string& output_path,
                 const SimulateOptions& options, std::ostream& out, std::ostream& err) {
  try {
    const Scenario sc = load_scenario(scenario_path);
    const FieldOptions field_options{sc.integrator.lambda_cond_max};
    if (options.reduced) {
      if (!sc.scene.is_planar()) {
        err << "error: NotPlanarScene: --reduced needs the world to be the plane z=0 with "
               "orientation -1\n";
        return kExitConfig;
      }
      const auto result =
          integrate_until_failure(sc.scene.body, make_reduced_field(sc.scene.body, field_options),
                                  sc.initial_reduced_state(), sc.integrator);
      auto file = open_output(output_path, err);
      if (!file) return kExitConfig;
      write_reduced_csv(*file, result.trajectory, result.termination);
      if (!emit_gnuplot(options.gnuplot_path, output_path, kReducedCsvHeader, err)) {
        return kExitConfig;
      }
      if (result.termination) {
        report_termination(*result.termination, err);
        return kExitRuntime;
      }
      out << "wrote " << result.trajectory.size() << " samples to " << output_path << '\n';
      return kExitOk;
    }

    const FullState state0 = sc.initial_full_state();
    const auto result = integrate_until_failure(
        sc.scene, make_full_field(sc.scene, field_options), state0, sc.integrator);
    auto file = open_output(output_path, err);
    if (!file) return kExitConfig;
    write_full_csv(*file, result.trajectory, result.termination);
    if (!emit_gnuplot(options.gnuplot_path, output_path, kFullCsvHeader, err)) {
      return kExitConfig;
    }
    if (result.termination) {
      report_termination(*result.termination, err);
      return kExitRuntime;
    }
    out << "wrote " << result.trajectory.size() << " samples to " << output_path << '\n';
    return kExitOk;
  } catch (const RollingError& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::ConfigError || e.kind() == ErrorKind::DegenerateChart
               ? kExitConfig
               : kExitRuntime;
  }
}

int cmd_compare(const std::string& scenario_path, const std::string& output_path,
                const CompareOptions& options, std::ostream& out, std::ostream& err) {
  try {
    const Scenario sc = load_scenario(scenario_path);
    if (!sc.scene.is_planar()) {
      err << "error: NotPlanarScene: compare needs the world to be the plane z=0 with "
             "orientation -1\n";
      return kExitConfig;
    }
    const FieldOptions field_options{sc.integrator.lambda_cond_max};
    RigidBody reduced_body = sc.scene.body;
    reduced_body.gravity *= options.reduced_gravity_scale;

    const auto full = integrate_until_failure(
        sc.scene, make_full_field(sc.scene, field_options), sc.initial_full_state(), sc.integrator);
    const auto reduced =
        integrate_until_failure(reduced_body, make_reduced_field(reduced_body, field_options),
                                sc.initial_reduced_state(), sc.integrator);

    auto file = open_output(output_path, err);
    if (!file) return kExitConfig;
    *file << kCompareCsvHeader << '\n';
    const std::size_t n = std::min(full.trajectory.size(), reduced.trajectory.size());
    double max_y = 0.0, max_omega = 0.0, max_E = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const FullState& f = full.trajectory.states[k];
      const ReducedState& r = reduced.trajectory.states[k];
      const double dev_y = (f.yM - r.y).norm();
      const double dev_omega = (f.Omega - r.Omega).norm();
      const double dev_E = std::abs(full.trajectory.energy[k] - reduced.trajectory.energy[k]);
      max_y = std::max(max_y, dev_y);
      max_omega = std::max(max_omega, dev_omega);
      max_E = std::max(max_E, dev_E);
      write_csv_row(*file, {full.trajectory.times[k], dev_y, dev_omega, dev_E});
    }
    const auto& termination = full.termination ? full.termination : reduced.termination;
    if (termination) {
      *file << "# terminated: " << to_string(termination->kind)
            << " t=" << format_double(termination->time) << '\n';
    }
    if (!emit_gnuplot(options.gnuplot_path, output_path, kCompareCsvHeader, err)) {
      return kExitConfig;
    }
    out << "max dev_y=" << format_double(max_y) << " dev_omega=" << format_double(max_omega)
        << " dev_E=" << format_double(max_E) << '\n';
    if (termination) {
      report_termination(*termination, err);
      return kExitRuntime;
    }
    const double worst = std::max({max_y, max_omega, max_E});
    if (!(worst <= options.tolerance)) {
      err << "error: full and reduced trajectories differ by " << format_double(worst)
          << " (tolerance " << format_double(options.tolerance) << ")\n";
      return kExitMismatch;
    }
    return kExitOk;
  } catch (const RollingError& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::ConfigError || e.kind() == ErrorKind::DegenerateChart
               ? kExitConfig
               : kExitRuntime;
  }
}

}  // namespace rolling
