#pragma once

#include "rolling/dynamics_full.hpp"

namespace rolling {

/// A point (s, Omega) of the planar quotient M x R^3.
struct ReducedState {
  Vec2 y = Vec2::Zero();
  Vec3 Omega = Vec3::Zero();
};

struct ReducedTangent {
  Vec2 dy = Vec2::Zero();
  Vec3 dOmega = Vec3::Zero();
};

/// Reduced field written with the ambient Weingarten map of M.
ReducedTangent vector_field_reduced(const RigidBody& body, const ReducedState& state,
                                    const FieldOptions& options = {});

/// The same field assembled from the fundamental forms:
///   L dy/dt = B^T Omega,  B = hat(n) ds/dy,
///   I~ dOmega/dt + m hat(s) hat(Omega) (ds/dy) dy/dt = (I~ Omega) x Omega + m g n x s.
ReducedTangent vector_field_reduced_coords(const RigidBody& body, const ReducedState& state);

double energy_reduced(const RigidBody& body, const ReducedState& state);

ReducedState project_full_to_reduced(const Scene& scene, const FullState& state);

/// A representative of the SE(2) fiber over `state`: contact at world chart
/// point x0 with spin angle theta.
FullState embed_reduced_in_full(const Scene& scene, const ReducedState& state, double theta,
                                const Vec2& x0);

}  // namespace rolling
