#include "rolling/sampling.hpp"

#include <numbers>

namespace rolling {

Mat3 solid_ellipsoid_inertia(double mass, double a, double b, double c) {
  return (mass / 5.0) * Vec3(b * b + c * c, a * a + c * c, a * a + b * b).asDiagonal();
}

ChartDomain sampling_region(const SurfaceChart& chart) {
  switch (chart.kind()) {
    case ChartKind::Sphere:
    case ChartKind::Ellipsoid:
      return ChartDomain{Vec2(0.35, -std::numbers::pi), Vec2(std::numbers::pi - 0.35,
                                                             std::numbers::pi)};
    case ChartKind::Plane:
      return ChartDomain{Vec2(-2.0, -2.0), Vec2(2.0, 2.0)};
    case ChartKind::Paraboloid:
      return ChartDomain{Vec2(-1.0, -1.0), Vec2(1.0, 1.0)};
    case ChartKind::Custom:
      break;
  }
  return chart.domain();
}

RigidBody reference_ellipsoid_body(double gravity) {
  return RigidBody(1.0, solid_ellipsoid_inertia(1.0, 0.6, 0.8, 1.2),
                   SurfaceChart::ellipsoid(0.6, 0.8, 1.2), gravity);
}

std::vector<NamedScene> reference_scenes() {
  // Sphere body: geometric center offset from the center of mass, with an
  // anisotropic inertia, so that every torque term is active.
  const RigidBody sphere_body(1.3, Vec3(0.21, 0.26, 0.3).asDiagonal(),
                              SurfaceChart::sphere(0.7, Vec3(0.1, -0.05, 0.08)), 9.81);
  const RigidBody ellipsoid_body = reference_ellipsoid_body();
  // Inward normal: the body rolls on the outside of the world sphere.
  const SurfaceChart world_sphere = SurfaceChart::sphere(4.0, Vec3::Zero(), -1);
  const SurfaceChart world_plane = SurfaceChart::plane(-1);
  return {
      {"sphere/plane", Scene{sphere_body, world_plane}},
      {"sphere/sphere", Scene{sphere_body, world_sphere}},
      {"ellipsoid/plane", Scene{ellipsoid_body, world_plane}},
      {"ellipsoid/sphere", Scene{ellipsoid_body, world_sphere}},
  };
}

FullState random_full_state(const Scene& scene, Rng& rng, double omega_scale) {
  const ChartDomain bodyRegion = sampling_region(scene.body.surface);
  const ChartDomain worldRegion = sampling_region(scene.world);
  const Vec2 yM = rng.uniform2(bodyRegion.lo, bodyRegion.hi);
  const Vec2 yH = rng.uniform2(worldRegion.lo, worldRegion.hi);
  const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
  const Vec3 Omega = rng.uniform3(-omega_scale, omega_scale);
  return make_full_state(scene, yM, yH, theta, Omega);
}

ReducedState random_reduced_state(const RigidBody& body, Rng& rng, double omega_scale) {
  const ChartDomain region = sampling_region(body.surface);
  ReducedState state;
  state.y = rng.uniform2(region.lo, region.hi);
  state.Omega = rng.uniform3(-omega_scale, omega_scale);
  return state;
}

}  // namespace rolling
