#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rolling/dynamics_reduced.hpp"
#include "rolling/errors.hpp"

namespace rolling {

struct IntegratorConfig {
  double h = 1e-3;
  double T = 1.0;
  int sample_stride = 1;
  bool project_rotation = true;
  bool project_contact = true;
  double lambda_cond_max = 1e8;

  /// Throws RollingError(ConfigError) when the fields are inconsistent.
  void validate() const;
  /// Number of fixed steps covering [0, T].
  long long step_count() const;
};

template <class State>
struct Trajectory {
  std::vector<double> times;
  std::vector<State> states;
  std::vector<double> energy;
  /// Filled for full-state trajectories only.
  std::vector<double> so3_residual;
  std::vector<double> contact_residual;

  std::size_t size() const { return times.size(); }
};

struct Termination {
  ErrorKind kind;
  /// Time of the last accepted state before the failing step.
  double time;
  std::string message;
};

template <class State>
struct IntegrationResult {
  Trajectory<State> trajectory;
  std::optional<Termination> termination;
};

class IntegrationError : public RollingError {
 public:
  explicit IntegrationError(const Termination& t);
  double time() const noexcept { return time_; }

 private:
  double time_;
};

using FullField = std::function<FullTangent(const FullState&)>;
using ReducedField = std::function<ReducedTangent(const ReducedState&)>;

FullField make_full_field(const Scene& scene, const FieldOptions& options = {});
ReducedField make_reduced_field(const RigidBody& body, const FieldOptions& options = {});

/// Explicit Euler displacement along a tangent, with the rotation moved on
/// the group: A exp(dt hat(Omega_frame)).
FullState advance_euler(const FullState& state, const FullTangent& tangent, double dt);
ReducedState advance_euler(const ReducedState& state, const ReducedTangent& tangent, double dt);

/// Classical four-stage Runge-Kutta. The rotation is advanced in Munthe-Kaas
/// form: stage increments live in the body-frame Lie algebra and the step
/// applies A <- A exp(hat(u)).
FullState rk4_step(const FullField& field, const FullState& state, double h);
ReducedState rk4_step(const ReducedField& field, const ReducedState& state, double h);

/// Re-imposes the SO(3) and normal-matching constraints according to the
/// projection flags of `config`.
FullState project_state(const Scene& scene, const FullState& state,
                        const IntegratorConfig& config);

IntegrationResult<FullState> integrate_until_failure(const Scene& scene, const FullField& field,
                                                     const FullState& state0,
                                                     const IntegratorConfig& config);
IntegrationResult<ReducedState> integrate_until_failure(const RigidBody& body,
                                                        const ReducedField& field,
                                                        const ReducedState& state0,
                                                        const IntegratorConfig& config);

/// As integrate_until_failure, but throws IntegrationError on termination.
Trajectory<FullState> integrate(const Scene& scene, const FullField& field,
                                const FullState& state0, const IntegratorConfig& config);
Trajectory<ReducedState> integrate(const RigidBody& body, const ReducedField& field,
                                   const ReducedState& state0, const IntegratorConfig& config);

}  // namespace rolling
