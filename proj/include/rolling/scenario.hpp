#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "rolling/integrate.hpp"

namespace rolling {

/// A simulation setup read from a TOML scenario file:
///
///   [body]            mass, inertia (3 principal values or a 3x3 array), gravity
///   [body.surface]    name, orientation, chart parameters, optional domain
///   [world]           name, orientation, chart parameters, optional domain
///   [initial]         yM, yH, theta, omega
///   [integrator]      h, T, sample_stride, project_rotation, project_contact,
///                     lambda_cond_max
struct Scenario {
  std::string source;
  Scene scene;
  Vec2 yM = Vec2::Zero();
  Vec2 yH = Vec2::Zero();
  double theta = 0.0;
  Vec3 omega = Vec3::Zero();
  IntegratorConfig integrator;

  FullState initial_full_state() const;
  ReducedState initial_reduced_state() const { return ReducedState{yM, omega}; }
};

/// Errors are RollingError(ConfigError) whose message starts with
/// "<source>:<line>: ".
Scenario parse_scenario(std::string_view text, const std::string& source);
Scenario load_scenario(const std::filesystem::path& path);

}  // namespace rolling
