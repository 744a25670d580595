#include "rolling/integrate.hpp"

#include <cmath>

#include <Eigen/LU>

namespace rolling {

namespace {

constexpr double kContactTolerance = 1e-10;
constexpr double kProjectionReach = 0.1;
constexpr int kNewtonSteps = 5;

void require_in_domains(const Scene& scene, const FullState& state) {
  if (!scene.body.surface.contains(state.yM)) {
    throw RollingError(ErrorKind::ChartBoundary, "body contact left the " +
                                                     scene.body.surface.name() + " chart domain");
  }
  if (!scene.world.contains(state.yH)) {
    throw RollingError(ErrorKind::ChartBoundary,
                       "world contact left the " + scene.world.name() + " chart domain");
  }
}

Mat3 orthonormalize(const Mat3& A) {
  Mat3 R;
  R.col(0) = A.col(0).normalized();
  R.col(1) = (A.col(1) - A.col(1).dot(R.col(0)) * R.col(0)).normalized();
  R.col(2) = R.col(0).cross(R.col(1));
  return R;
}

double contact_residual(const Scene& scene, const FullState& state) {
  return (state.A * normal(scene.body.surface, state.yM) - normal(scene.world, state.yH)).norm();
}

FullState project_contact(const Scene& scene, FullState state) {
  const Vec3 nM = normal(scene.body.surface, state.yM);
  double residual = contact_residual(scene, state);
  if (residual <= kContactTolerance) return state;
  if (!(residual < kProjectionReach)) {
    throw RollingError(ErrorKind::ProjectionDiverged,
                       "contact residual " + std::to_string(residual) + " is too large to project");
  }
  for (int step = 0; step < kNewtonSteps && residual > kContactTolerance; ++step) {
    const SurfaceChart& H = scene.world;
    const TangentFrame frame = tangent_frame(H, state.yH);
    const Mat32 E = frame.basis();
    // d(A nM - nH)/dyH = W_H J_H, taken in H's tangent frame.
    const Mat2 jac = E.transpose() * weingarten_ambient(H, state.yH) * H.jacobian(state.yH);
    const Vec3 r = state.A * nM - frame.n;
    if (!(condition_number(jac) <= 1e8)) {
      // A flat world fixes n_H, so the normal can only be matched by turning
      // the body about the contact point.
      state.A = rotation_aligning(state.A * nM, frame.n, 0.0) * state.A;
    } else {
      state.yH -= jac.inverse() * (E.transpose() * r);
    }
    residual = contact_residual(scene, state);
  }
  if (!(residual <= kContactTolerance)) {
    throw RollingError(ErrorKind::ProjectionDiverged,
                       "contact projection stalled at residual " + std::to_string(residual));
  }
  return state;
}

template <class State>
void record_reduced_or_full(Trajectory<State>& traj, double t, const State& state, double energy) {
  traj.times.push_back(t);
  traj.states.push_back(state);
  traj.energy.push_back(energy);
}

}  // namespace

void IntegratorConfig::validate() const {
  auto fail = [](const std::string& msg) { throw RollingError(ErrorKind::ConfigError, msg); };
  if (!(h > 0.0) || !std::isfinite(h)) fail("integrator.h must be positive");
  if (!(T >= 0.0) || !std::isfinite(T)) fail("integrator.T must be non-negative");
  if (T > 0.0 && h > T) fail("integrator.h must not exceed integrator.T");
  if (sample_stride < 1) fail("integrator.sample_stride must be at least 1");
  if (!(lambda_cond_max > 1.0)) fail("integrator.lambda_cond_max must exceed 1");
}

long long IntegratorConfig::step_count() const {
  return static_cast<long long>(std::floor(T / h + 1e-9));
}

IntegrationError::IntegrationError(const Termination& t)
    : RollingError(t.kind, t.message + " (t=" + std::to_string(t.time) + ")"), time_(t.time) {}

FullField make_full_field(const Scene& scene, const FieldOptions& options) {
  return [scene, options](const FullState& s) { return vector_field_full(scene, s, options); };
}

ReducedField make_reduced_field(const RigidBody& body, const FieldOptions& options) {
  return [body, options](const ReducedState& s) {
    return vector_field_reduced(body, s, options);
  };
}

FullState advance_euler(const FullState& state, const FullTangent& tangent, double dt) {
  FullState out;
  out.A = state.A * so3_exp(dt * tangent.Omega_frame);
  out.yM = state.yM + dt * tangent.dyM;
  out.yH = state.yH + dt * tangent.dyH;
  out.Omega = state.Omega + dt * tangent.dOmega;
  return out;
}

ReducedState advance_euler(const ReducedState& state, const ReducedTangent& tangent, double dt) {
  return ReducedState{state.y + dt * tangent.dy, state.Omega + dt * tangent.dOmega};
}

FullState rk4_step(const FullField& field, const FullState& x0, double h) {
  auto stage = [&](const Vec3& u, const FullTangent& k, double c) {
    FullState x;
    x.A = x0.A * so3_exp(u);
    x.yM = x0.yM + c * h * k.dyM;
    x.yH = x0.yH + c * h * k.dyH;
    x.Omega = x0.Omega + c * h * k.dOmega;
    return x;
  };

  const FullTangent k1 = field(x0);
  const Vec3 w1 = k1.Omega_frame;

  const Vec3 u2 = 0.5 * h * w1;
  const FullTangent k2 = field(stage(u2, k1, 0.5));
  const Vec3 w2 = dexp_inv(u2, k2.Omega_frame);

  const Vec3 u3 = 0.5 * h * w2;
  const FullTangent k3 = field(stage(u3, k2, 0.5));
  const Vec3 w3 = dexp_inv(u3, k3.Omega_frame);

  const Vec3 u4 = h * w3;
  const FullTangent k4 = field(stage(u4, k3, 1.0));
  const Vec3 w4 = dexp_inv(u4, k4.Omega_frame);

  FullState x1;
  x1.A = x0.A * so3_exp(h / 6.0 * (w1 + 2.0 * w2 + 2.0 * w3 + w4));
  x1.yM = x0.yM + h / 6.0 * (k1.dyM + 2.0 * k2.dyM + 2.0 * k3.dyM + k4.dyM);
  x1.yH = x0.yH + h / 6.0 * (k1.dyH + 2.0 * k2.dyH + 2.0 * k3.dyH + k4.dyH);
  x1.Omega = x0.Omega + h / 6.0 * (k1.dOmega + 2.0 * k2.dOmega + 2.0 * k3.dOmega + k4.dOmega);
  return x1;
}

ReducedState rk4_step(const ReducedField& field, const ReducedState& x0, double h) {
  const ReducedTangent k1 = field(x0);
  const ReducedTangent k2 = field(advance_euler(x0, k1, 0.5 * h));
  const ReducedTangent k3 = field(advance_euler(x0, k2, 0.5 * h));
  const ReducedTangent k4 = field(advance_euler(x0, k3, h));
  ReducedState x1;
  x1.y = x0.y + h / 6.0 * (k1.dy + 2.0 * k2.dy + 2.0 * k3.dy + k4.dy);
  x1.Omega = x0.Omega + h / 6.0 * (k1.dOmega + 2.0 * k2.dOmega + 2.0 * k3.dOmega + k4.dOmega);
  return x1;
}

FullState project_state(const Scene& scene, const FullState& state,
                        const IntegratorConfig& config) {
  FullState out = state;
  if (config.project_rotation) out.A = orthonormalize(out.A);
  if (config.project_contact) out = project_contact(scene, out);
  return out;
}

IntegrationResult<FullState> integrate_until_failure(const Scene& scene, const FullField& field,
                                                     const FullState& state0,
                                                     const IntegratorConfig& config) {
  config.validate();
  IntegrationResult<FullState> result;
  auto& traj = result.trajectory;
  auto record = [&](double t, const FullState& s) {
    record_reduced_or_full(traj, t, s, energy_full(scene, s));
    const ConstraintResiduals r = constraint_residuals(scene, s);
    traj.so3_residual.push_back(r.so3);
    traj.contact_residual.push_back(r.contact);
  };

  const long long steps = config.step_count();
  FullState state = state0;
  try {
    record(0.0, state);
  } catch (const RollingError& e) {
    result.termination = Termination{e.kind(), 0.0, e.what()};
    return result;
  }
  for (long long k = 0; k < steps; ++k) {
    const double t = static_cast<double>(k) * config.h;
    try {
      FullState next = rk4_step(field, state, config.h);
      next = project_state(scene, next, config);
      require_in_domains(scene, next);
      state = next;
      if ((k + 1) % config.sample_stride == 0) {
        record(static_cast<double>(k + 1) * config.h, state);
      }
    } catch (const RollingError& e) {
      result.termination = Termination{e.kind(), t, e.what()};
      break;
    }
  }
  return result;
}

IntegrationResult<ReducedState> integrate_until_failure(const RigidBody& body,
                                                        const ReducedField& field,
                                                        const ReducedState& state0,
                                                        const IntegratorConfig& config) {
  config.validate();
  IntegrationResult<ReducedState> result;
  auto& traj = result.trajectory;
  const long long steps = config.step_count();
  ReducedState state = state0;
  try {
    record_reduced_or_full(traj, 0.0, state, energy_reduced(body, state));
  } catch (const RollingError& e) {
    result.termination = Termination{e.kind(), 0.0, e.what()};
    return result;
  }
  for (long long k = 0; k < steps; ++k) {
    const double t = static_cast<double>(k) * config.h;
    try {
      ReducedState next = rk4_step(field, state, config.h);
      if (!body.surface.contains(next.y)) {
        throw RollingError(ErrorKind::ChartBoundary,
                           "body contact left the " + body.surface.name() + " chart domain");
      }
      state = next;
      if ((k + 1) % config.sample_stride == 0) {
        record_reduced_or_full(traj, static_cast<double>(k + 1) * config.h, state,
                               energy_reduced(body, state));
      }
    } catch (const RollingError& e) {
      result.termination = Termination{e.kind(), t, e.what()};
      break;
    }
  }
  return result;
}

Trajectory<FullState> integrate(const Scene& scene, const FullField& field,
                                const FullState& state0, const IntegratorConfig& config) {
  auto result = integrate_until_failure(scene, field, state0, config);
  if (result.termination) throw IntegrationError(*result.termination);
  return std::move(result.trajectory);
}

Trajectory<ReducedState> integrate(const RigidBody& body, const ReducedField& field,
                                   const ReducedState& state0, const IntegratorConfig& config) {
  auto result = integrate_until_failure(body, field, state0, config);
  if (result.termination) throw IntegrationError(*result.termination);
  return std::move(result.trajectory);
}

}  // namespace rolling
