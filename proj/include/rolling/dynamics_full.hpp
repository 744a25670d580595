#pragma once

#include "rolling/body.hpp"

namespace rolling {

/// A body rolling on a fixed world surface H.
struct Scene {
  RigidBody body;
  SurfaceChart world;

  /// True when H is the horizontal plane z = 0 with normal -k, the setting
  /// of the SE(2)-reduced equations.
  bool is_planar() const;
};

/// A point (A, s, x, Omega) of the constrained phase space, with s and x
/// stored as chart coordinates of the body and world surfaces.
struct FullState {
  Mat3 A = Mat3::Identity();
  Vec2 yM = Vec2::Zero();
  Vec2 yH = Vec2::Zero();
  Vec3 Omega = Vec3::Zero();
};

struct FullTangent {
  /// A^{-1} dA/dt, unhatted.
  Vec3 Omega_frame = Vec3::Zero();
  Vec2 dyM = Vec2::Zero();
  Vec2 dyH = Vec2::Zero();
  Vec3 dOmega = Vec3::Zero();
};

struct FieldOptions {
  /// Largest accepted condition number of Lambda (or of the body shape
  /// operator in the reduced field).
  double lambda_cond_max = 1e8;
};

/// Lambda = L_M - A^{-1} L_H A restricted to T_sM, in the body tangent frame.
Mat2 lambda_operator(const Scene& scene, const FullState& state);

/// Rolling vector field on the constrained phase space.
/// Throws SingularLambda when Lambda is numerically singular and
/// ChartBoundary when yM or yH is outside its chart domain.
FullTangent vector_field_full(const Scene& scene, const FullState& state,
                              const FieldOptions& options = {});

double energy_full(const Scene& scene, const FullState& state);
double lagrangian_on_constraint(const Scene& scene, const FullState& state);

/// Largest violation of the TQ condition and of the rolling constraint
/// dx/dt = A ds/dt by a candidate tangent vector.
double tangent_membership_residual(const Scene& scene, const FullState& state,
                                   const FullTangent& tangent);

/// Momentum of the planar SE(2) generator (xi_r, xi_a). Only defined on
/// planar scenes; throws NotPlanarScene otherwise.
double momentum_J(const Scene& scene, const FullState& state, double xi_r, const Vec2& xi_a);

/// Places the body so that its normal at yM meets the world normal at yH,
/// with theta selecting the spin about the contact normal.
FullState make_full_state(const Scene& scene, const Vec2& yM, const Vec2& yH, double theta,
                          const Vec3& Omega);

struct ConstraintResiduals {
  double so3 = 0.0;
  double contact = 0.0;
};

ConstraintResiduals constraint_residuals(const Scene& scene, const FullState& state);

/// Body-frame contact point s and world contact point x.
Vec3 body_contact_point(const Scene& scene, const FullState& state);
Vec3 world_contact_point(const Scene& scene, const FullState& state);

}  // namespace rolling
