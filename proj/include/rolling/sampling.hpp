#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rolling/dynamics_reduced.hpp"

namespace rolling {

/// Seeded generator whose uniform draws are identical across standard
/// libraries (std::uniform_real_distribution is not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
  // Draws are sequenced explicitly; argument evaluation order is unspecified.
  Vec2 uniform2(const Vec2& lo, const Vec2& hi) {
    Vec2 v;
    v(0) = uniform(lo(0), hi(0));
    v(1) = uniform(lo(1), hi(1));
    return v;
  }
  Vec3 uniform3(double lo, double hi) {
    Vec3 v;
    for (int i = 0; i < 3; ++i) v(i) = uniform(lo, hi);
    return v;
  }

 private:
  std::mt19937_64 engine_;
};

/// Principal inertia of a uniform solid ellipsoid with semi-axes (a, b, c).
Mat3 solid_ellipsoid_inertia(double mass, double a, double b, double c);

/// Sub-rectangle of a built-in chart's domain that keeps samples well away
/// from coordinate singularities.
ChartDomain sampling_region(const SurfaceChart& chart);

struct NamedScene {
  std::string name;
  Scene scene;
};

/// The reference scene family: {sphere, ellipsoid} bodies on {plane, sphere}
/// worlds. Every state of these scenes is D-regular.
std::vector<NamedScene> reference_scenes();

/// A rigid body shaped as a triaxial ellipsoid (0.6, 0.8, 1.2), uniform mass 1.
RigidBody reference_ellipsoid_body(double gravity = 9.81);

FullState random_full_state(const Scene& scene, Rng& rng, double omega_scale = 2.0);
ReducedState random_reduced_state(const RigidBody& body, Rng& rng, double omega_scale = 2.0);

}  // namespace rolling
