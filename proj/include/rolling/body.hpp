#pragma once

#include "rolling/geometry.hpp"

namespace rolling {

/// A rigid body with its center of mass at the origin of the frame in which
/// both the inertia tensor and the surface chart are expressed.
struct RigidBody {
  double mass = 1.0;
  Mat3 inertia = Mat3::Identity();
  SurfaceChart surface;
  double gravity = 9.81;

  RigidBody(double mass, const Mat3& inertia, SurfaceChart surface, double gravity = 9.81);
};

/// Inertia about a contact point at body position s: I - m hat(s)^2.
Mat3 augmented_inertia(const RigidBody& body, const Vec3& s);

}  // namespace rolling
