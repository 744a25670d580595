#include "rolling/body.hpp"

#include <utility>

namespace rolling {

RigidBody::RigidBody(double mass, const Mat3& inertia, SurfaceChart surface, double gravity)
    : mass(mass), inertia(inertia), surface(std::move(surface)), gravity(gravity) {}

Mat3 augmented_inertia(const RigidBody& body, const Vec3& s) {
  // -m hat(s)^2 = m (|s|^2 Id - s s^T), written out to stay exactly symmetric.
  Mat3 out = body.inertia;
  out += body.mass * (s.squaredNorm() * Mat3::Identity() - s * s.transpose());
  return 0.5 * (out + out.transpose());
}

}  // namespace rolling
