#include "rolling/dynamics_reduced.hpp"

#include <cmath>

#include <Eigen/Cholesky>
#include <Eigen/LU>

#include "rolling/errors.hpp"

namespace rolling {

namespace {

void require_in_domain(const RigidBody& body, const Vec2& y) {
  if (!body.surface.contains(y)) {
    throw RollingError(ErrorKind::ChartBoundary,
                       "body contact coordinates left the " + body.surface.name() +
                           " chart domain");
  }
}

void require_planar(const Scene& scene) {
  if (!scene.is_planar()) {
    throw RollingError(ErrorKind::NotPlanarScene,
                       "the reduced system needs the horizontal plane world with normal -k");
  }
}

}  // namespace

ReducedTangent vector_field_reduced(const RigidBody& body, const ReducedState& state,
                                    const FieldOptions& options) {
  require_in_domain(body, state.y);
  const TangentFrame frame = tangent_frame(body.surface, state.y);
  const Mat32 E = frame.basis();
  const Mat2 L = E.transpose() * weingarten_ambient(body.surface, state.y) * E;
  const double cond = condition_number(L);
  if (!(cond <= options.lambda_cond_max)) {
    throw RollingError(ErrorKind::SingularShapeOperator,
                       "shape operator condition number " + std::to_string(cond) +
                           " exceeds limit (flat point of the body surface)");
  }

  const Vec3& Omega = state.Omega;
  const Vec3& n = frame.n;
  const Vec2 c = L.inverse() * (E.transpose() * Omega.cross(n));
  const Vec3 sdot = E * c;
  const Vec3 s = body.surface.eval(state.y);
  const Mat3 It = augmented_inertia(body, s);

  ReducedTangent out;
  out.dy = frame.chart_to_frame.inverse() * c;
  const Vec3 rhs = (It * Omega).cross(Omega) +
                   body.mass * s.cross(sdot.cross(Omega) - body.gravity * n);
  out.dOmega = It.llt().solve(rhs);
  return out;
}

ReducedTangent vector_field_reduced_coords(const RigidBody& body, const ReducedState& state) {
  require_in_domain(body, state.y);
  const SurfaceChart& M = body.surface;
  const Mat2 L = second_form(M, state.y);
  const double scale = L.squaredNorm();
  if (!(std::abs(L.determinant()) >= 1e-12 * scale) || scale == 0.0) {
    throw RollingError(ErrorKind::SingularShapeOperator,
                       "second fundamental form is singular (flat point of the body surface)");
  }
  const Mat32 J = M.jacobian(state.y);
  const Vec3 n = normal(M, state.y);
  const Vec3 s = M.eval(state.y);
  const Vec3& Omega = state.Omega;
  const Mat32 B = hat(n) * J;

  ReducedTangent out;
  out.dy = L.inverse() * (B.transpose() * Omega);
  const Mat3 It = augmented_inertia(body, s);
  const double m = body.mass;
  const Vec3 rhs = (It * Omega).cross(Omega) + m * body.gravity * n.cross(s) -
                   m * hat(s) * hat(Omega) * J * out.dy;
  out.dOmega = It.llt().solve(rhs);
  return out;
}

double energy_reduced(const RigidBody& body, const ReducedState& state) {
  const Vec3 s = body.surface.eval(state.y);
  const Vec3 n = normal(body.surface, state.y);
  return 0.5 * state.Omega.dot(augmented_inertia(body, s) * state.Omega) +
         body.mass * body.gravity * n.dot(s);
}

ReducedState project_full_to_reduced(const Scene& scene, const FullState& state) {
  require_planar(scene);
  return ReducedState{state.yM, state.Omega};
}

FullState embed_reduced_in_full(const Scene& scene, const ReducedState& state, double theta,
                                const Vec2& x0) {
  require_planar(scene);
  return make_full_state(scene, state.y, x0, theta, state.Omega);
}

}  // namespace rolling
