// Command-line front end: simulate, compare and check.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rolling/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Rigid body rolling without slipping on a fixed surface"};
  app.require_subcommand(1);

  std::string gnuplot_path;
  app.add_option("--emit-gnuplot", gnuplot_path, "Also write a gnuplot script for the CSV");

  std::string scenario;
  std::string output;
  bool reduced = false;
  auto* simulate = app.add_subcommand("simulate", "Integrate a scenario and write a CSV trajectory");
  simulate->add_option("scenario", scenario, "Scenario file (TOML)")->required();
  simulate->add_option("-o,--output", output, "Output CSV path")->required();
  simulate->add_flag("--reduced", reduced, "Integrate the SE(2)-reduced planar system");
  simulate->add_option("--emit-gnuplot", gnuplot_path, "Also write a gnuplot script for the CSV");

  auto* compare = app.add_subcommand("compare", "Compare full and reduced planar dynamics");
  compare->add_option("scenario", scenario, "Scenario file (TOML)")->required();
  compare->add_option("-o,--output", output, "Output CSV path")->required();
  compare->add_option("--emit-gnuplot", gnuplot_path, "Also write a gnuplot script for the CSV");

  std::uint64_t seed = rolling::CheckOptions{}.seed;
  auto* check = app.add_subcommand("check", "Run the invariant suite");
  check->add_option("--seed", seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : rolling::kExitConfig;
  }

  std::optional<std::string> gnuplot;
  if (!gnuplot_path.empty()) gnuplot = gnuplot_path;

  if (simulate->parsed()) {
    return rolling::cmd_simulate(scenario, output, {reduced, gnuplot}, std::cout, std::cerr);
  }
  if (compare->parsed()) {
    rolling::CompareOptions options;
    options.gnuplot_path = gnuplot;
    return rolling::cmd_compare(scenario, output, options, std::cout, std::cerr);
  }
  rolling::CheckOptions options;
  options.seed = seed;
  return rolling::cmd_check(options, std::cout);
}
