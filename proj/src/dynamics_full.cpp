#include "rolling/dynamics_full.hpp"

#include <Eigen/Cholesky>
#include <Eigen/LU>

#include "rolling/errors.hpp"

namespace rolling {

namespace {

void require_in_domain(const SurfaceChart& chart, const Vec2& y, const char* which) {
  if (!chart.contains(y)) {
    throw RollingError(ErrorKind::ChartBoundary,
                       std::string(which) + " coordinates left the " + chart.name() +
                           " chart domain");
  }
}

struct LambdaParts {
  Mat2 body;
  Mat2 world;
  Mat2 lambda() const { return body - world; }
};

LambdaParts lambda_parts(const Scene& scene, const FullState& state, const Mat32& E) {
  const Mat3 WM = weingarten_ambient(scene.body.surface, state.yM);
  const Mat3 WH = weingarten_ambient(scene.world, state.yH);
  return {E.transpose() * WM * E, E.transpose() * state.A.transpose() * WH * state.A * E};
}

Mat2 lambda_in_frame(const Scene& scene, const FullState& state, const Mat32& E) {
  return lambda_parts(scene, state, E).lambda();
}

}  // namespace

bool Scene::is_planar() const {
  return world.kind() == ChartKind::Plane && world.orientation() == -1;
}

Mat2 lambda_operator(const Scene& scene, const FullState& state) {
  const TangentFrame frame = tangent_frame(scene.body.surface, state.yM);
  return lambda_in_frame(scene, state, frame.basis());
}

FullTangent vector_field_full(const Scene& scene, const FullState& state,
                              const FieldOptions& options) {
  const RigidBody& body = scene.body;
  require_in_domain(body.surface, state.yM, "body contact");
  require_in_domain(scene.world, state.yH, "world contact");

  const TangentFrame frame = tangent_frame(body.surface, state.yM);
  const Mat32 E = frame.basis();
  const LambdaParts parts = lambda_parts(scene, state, E);
  const Mat2 Lambda = parts.lambda();
  // When the two curvatures cancel, what is left of Lambda is rounding noise,
  // and noise can be perfectly well conditioned.
  const double scale = parts.body.norm() + parts.world.norm();
  if (Lambda.norm() <= 1e-12 * scale) {
    throw RollingError(ErrorKind::SingularLambda,
                       "Lambda vanishes: body and world curvatures cancel");
  }
  const double cond = condition_number(Lambda);
  if (!(cond <= options.lambda_cond_max)) {
    throw RollingError(ErrorKind::SingularLambda,
                       "Lambda condition number " + std::to_string(cond) + " exceeds limit");
  }

  const Vec3& Omega = state.Omega;
  const Vec2 c = Lambda.inverse() * (E.transpose() * Omega.cross(frame.n));
  const Vec3 sdot = E * c;
  const Vec3 xdot = state.A * sdot;

  FullTangent out;
  out.Omega_frame = Omega;
  out.dyM = frame.chart_to_frame.inverse() * c;
  const Mat32 JH = scene.world.jacobian(state.yH);
  out.dyH = (JH.transpose() * JH).inverse() * (JH.transpose() * xdot);

  const Vec3 s = body.surface.eval(state.yM);
  const Mat3 It = augmented_inertia(body, s);
  const Vec3 down_in_body = state.A.transpose() * unit_k();
  const Vec3 rhs = (It * Omega).cross(Omega) +
                   body.mass * s.cross(sdot.cross(Omega) + body.gravity * down_in_body);
  out.dOmega = It.llt().solve(rhs);
  return out;
}

double energy_full(const Scene& scene, const FullState& state) {
  const RigidBody& body = scene.body;
  const Vec3 s = body.surface.eval(state.yM);
  const Vec3 x = scene.world.eval(state.yH);
  const double kinetic = 0.5 * state.Omega.dot(augmented_inertia(body, s) * state.Omega);
  return kinetic + body.mass * body.gravity * (x - state.A * s).dot(unit_k());
}

double lagrangian_on_constraint(const Scene& scene, const FullState& state) {
  const RigidBody& body = scene.body;
  const Vec3 s = body.surface.eval(state.yM);
  const Vec3 x = scene.world.eval(state.yH);
  const Vec3& Omega = state.Omega;
  return 0.5 * Omega.dot(body.inertia * Omega) +
         0.5 * body.mass * Omega.cross(s).squaredNorm() -
         body.mass * body.gravity * (x - state.A * s).dot(unit_k());
}

double tangent_membership_residual(const Scene& scene, const FullState& state,
                                   const FullTangent& tangent) {
  const SurfaceChart& M = scene.body.surface;
  const SurfaceChart& H = scene.world;
  const Vec3 sdot = M.jacobian(state.yM) * tangent.dyM;
  const Vec3 xdot = H.jacobian(state.yH) * tangent.dyH;
  const Vec3 nM = normal(M, state.yM);
  const Vec3 lhs = tangent.Omega_frame.cross(nM);
  const Vec3 rhs = weingarten_ambient(M, state.yM) * sdot -
                   state.A.transpose() * (weingarten_ambient(H, state.yH) * xdot);
  return std::max((lhs - rhs).norm(), (xdot - state.A * sdot).norm());
}

double momentum_J(const Scene& scene, const FullState& state, double xi_r, const Vec2& xi_a) {
  if (!scene.is_planar()) {
    throw RollingError(ErrorKind::NotPlanarScene, "momentum_J needs the horizontal plane world");
  }
  const RigidBody& body = scene.body;
  const Vec3 s = body.surface.eval(state.yM);
  const Vec3 x = scene.world.eval(state.yH);
  const Vec3 spin = state.Omega.cross(s);
  const Vec3 rotational = state.A * (augmented_inertia(body, s) * state.Omega) -
                          body.mass * x.cross(spin);
  return xi_r * rotational.dot(unit_k()) -
         body.mass * (state.A * spin).dot(Vec3(xi_a(0), xi_a(1), 0.0));
}

FullState make_full_state(const Scene& scene, const Vec2& yM, const Vec2& yH, double theta,
                          const Vec3& Omega) {
  FullState state;
  state.A = rotation_aligning(normal(scene.body.surface, yM), normal(scene.world, yH), theta);
  state.yM = yM;
  state.yH = yH;
  state.Omega = Omega;
  return state;
}

ConstraintResiduals constraint_residuals(const Scene& scene, const FullState& state) {
  ConstraintResiduals r;
  r.so3 = (state.A.transpose() * state.A - Mat3::Identity()).norm();
  r.contact =
      (state.A * normal(scene.body.surface, state.yM) - normal(scene.world, state.yH)).norm();
  return r;
}

Vec3 body_contact_point(const Scene& scene, const FullState& state) {
  return scene.body.surface.eval(state.yM);
}

Vec3 world_contact_point(const Scene& scene, const FullState& state) {
  return scene.world.eval(state.yH);
}

}  // namespace rolling
