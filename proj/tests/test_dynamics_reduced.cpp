#include <gtest/gtest.h>

#include <numbers>

#include <Eigen/LU>

#include "rolling/dynamics_reduced.hpp"
#include "rolling/errors.hpp"
#include "rolling/sampling.hpp"

namespace rolling {
namespace {

constexpr double kPi = std::numbers::pi;

RigidBody uniform_unit_sphere() {
  return RigidBody(1.0, 0.4 * Mat3::Identity(), SurfaceChart::sphere(1.0));
}

Scene on_plane(const RigidBody& body) { return Scene{body, SurfaceChart::plane(-1)}; }

double rel_diff(const ReducedTangent& a, const ReducedTangent& b) {
  const double d = std::max((a.dy - b.dy).norm(), (a.dOmega - b.dOmega).norm());
  const double scale = std::max({1.0, b.dy.norm(), b.dOmega.norm()});
  return d / scale;
}

TEST(VectorFieldReduced, AtRest) {
  const RigidBody body = reference_ellipsoid_body();
  const ReducedState st{Vec2(1.0, 0.7), Vec3::Zero()};
  const Vec3 s = body.surface.eval(st.y), n = normal(body.surface, st.y);
  const Vec3 expected =
      augmented_inertia(body, s).inverse() * (-body.mass * body.gravity * s.cross(n));
  for (const ReducedTangent& t :
       {vector_field_reduced(body, st), vector_field_reduced_coords(body, st)}) {
    EXPECT_LE(t.dy.norm(), 1e-15);
    EXPECT_LE((t.dOmega - expected).norm(), 1e-12);
  }
}

TEST(VectorFieldReduced, UniformSphereSpinningAboutNormal) {
  const RigidBody body = uniform_unit_sphere();
  const Vec2 y(0.8, 2.1);
  const ReducedState st{y, -2.5 * normal(body.surface, y)};
  const ReducedTangent t = vector_field_reduced(body, st);
  EXPECT_LE(t.dy.norm(), 1e-14);
  EXPECT_LE(t.dOmega.norm(), 1e-13);
}

TEST(VectorFieldReducedCoords, UnitSphereVelocity) {
  const RigidBody body = uniform_unit_sphere();
  const ReducedState st{Vec2(1.3, -0.4), Vec3(0.5, -1.0, 2.0)};
  const Mat32 J = body.surface.jacobian(st.y);
  const Mat32 B = hat(normal(body.surface, st.y)) * J;
  const Mat2 g = first_form(body.surface, st.y);
  const Vec2 expected = -g.inverse() * (B.transpose() * st.Omega);
  EXPECT_LE((vector_field_reduced_coords(body, st).dy - expected).norm(), 1e-13);
}

TEST(VectorFieldReduced, FormsAgree) {
  const RigidBody body = reference_ellipsoid_body();
  Rng rng(77);
  for (int i = 0; i < 1000; ++i) {
    const ReducedState st = random_reduced_state(body, rng);
    const ReducedTangent a = vector_field_reduced(body, st);
    const ReducedTangent b = vector_field_reduced_coords(body, st);
    EXPECT_LE((a.dy - b.dy).norm(), 1e-10);
    EXPECT_LE((a.dOmega - b.dOmega).norm(), 1e-10);
  }
}

TEST(VectorFieldReduced, FlatBodyIsSingular) {
  const RigidBody flat(1.0, Mat3::Identity(), SurfaceChart::plane(1));
  const ReducedState st{Vec2(0.1, 0.2), Vec3(1, 0, 0)};
  for (auto f : {+[](const RigidBody& b, const ReducedState& s) { vector_field_reduced(b, s); },
                 +[](const RigidBody& b, const ReducedState& s) {
                   vector_field_reduced_coords(b, s);
                 }}) {
    try {
      f(flat, st);
      ADD_FAILURE() << "expected SingularShapeOperator";
    } catch (const RollingError& e) {
      EXPECT_EQ(e.kind(), ErrorKind::SingularShapeOperator);
    }
  }
}

TEST(VectorFieldReduced, ChartBoundary) {
  const RigidBody body = uniform_unit_sphere();
  try {
    vector_field_reduced(body, ReducedState{Vec2(kPi, 0.0), Vec3(1, 0, 0)});
    ADD_FAILURE();
  } catch (const RollingError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ChartBoundary);
  }
}

TEST(EnergyReduced, Values) {
  const double r = 0.6;
  const RigidBody ball(2.0, 0.4 * 2.0 * r * r * Mat3::Identity(), SurfaceChart::sphere(r));
  EXPECT_NEAR(energy_reduced(ball, ReducedState{Vec2(1.0, 2.0), Vec3::Zero()}),
              2.0 * 9.81 * r, 1e-14);
  // A body whose surface passes through the center of mass: s along the tangent.
  const RigidBody slab(1.0, Mat3::Identity(), SurfaceChart::plane(1));
  EXPECT_EQ(energy_reduced(slab, ReducedState{Vec2(0.4, -0.3), Vec3::Zero()}), 0.0);
}

TEST(EnergyReduced, MatchesFullOnEmbeddings) {
  const Scene scene = on_plane(reference_ellipsoid_body());
  Rng rng(15);
  for (int i = 0; i < 50; ++i) {
    const ReducedState st = random_reduced_state(scene.body, rng);
    const FullState full =
        embed_reduced_in_full(scene, st, rng.uniform(0, 2 * kPi), rng.uniform2({-2, -2}, {2, 2}));
    EXPECT_NEAR(energy_reduced(scene.body, st), energy_full(scene, full), 1e-12);
  }
}

TEST(Projection, RoundTripAndPlanarity) {
  const Scene scene = on_plane(reference_ellipsoid_body());
  const ReducedState st{Vec2(1.1, -2.0), Vec3(0.3, 0.2, -0.1)};
  const ReducedState back =
      project_full_to_reduced(scene, embed_reduced_in_full(scene, st, 0.7, Vec2(1, 2)));
  EXPECT_EQ(back.y, st.y);
  EXPECT_EQ(back.Omega, st.Omega);

  const Scene curved = reference_scenes()[3].scene;
  Rng rng(3);
  const FullState full = random_full_state(curved, rng);
  EXPECT_THROW(project_full_to_reduced(curved, full), RollingError);
  EXPECT_THROW(embed_reduced_in_full(curved, st, 0.0, Vec2::Zero()), RollingError);
  const Scene upside_down{scene.body, SurfaceChart::plane(1)};
  EXPECT_THROW(project_full_to_reduced(upside_down, full), RollingError);
}

// (B, b) . (A, s, x, Omega) = (B A, s, B x + b, Omega) with B a rotation
// about k and b horizontal.
TEST(Projection, EmbeddingsAreRelatedByPlanarMotions) {
  const Scene scene = on_plane(reference_ellipsoid_body());
  Rng rng(16);
  for (int i = 0; i < 20; ++i) {
    const ReducedState st = random_reduced_state(scene.body, rng);
    const FullState f1 = embed_reduced_in_full(scene, st, rng.uniform(0, 6), Vec2(0.3, -1.0));
    const FullState f2 = embed_reduced_in_full(scene, st, rng.uniform(0, 6), Vec2(-1.2, 0.5));
    const Mat3 B = f2.A * f1.A.transpose();
    EXPECT_LE((B * unit_k() - unit_k()).norm(), 1e-12);
    EXPECT_NEAR(B.determinant(), 1.0, 1e-12);
    const Vec3 x1 = world_contact_point(scene, f1), x2 = world_contact_point(scene, f2);
    const Vec3 b = x2 - B * x1;
    EXPECT_NEAR(b.z(), 0.0, 1e-15);

    FullState moved = f1;
    moved.A = B * f1.A;
    moved.yH = (B * x1 + b).head<2>();
    EXPECT_LE((moved.A - f2.A).norm(), 1e-12);
    EXPECT_LE((moved.yH - f2.yH).norm(), 1e-12);
    const ReducedState p1 = project_full_to_reduced(scene, f1);
    const ReducedState p2 = project_full_to_reduced(scene, f2);
    EXPECT_EQ(p1.y, p2.y);
    EXPECT_EQ(p1.Omega, p2.Omega);
  }
}

TEST(Projection, ReductionCommutesWithDynamics) {
  Rng rng(18);
  for (const RigidBody& body : {reference_ellipsoid_body(), reference_scenes()[0].scene.body}) {
    const Scene scene = on_plane(body);
    for (int i = 0; i < 1000; ++i) {
      const ReducedState st = random_reduced_state(body, rng);
      const ReducedTangent red = vector_field_reduced(body, st);
      for (int k = 0; k < 2; ++k) {
        const FullState full = embed_reduced_in_full(scene, st, rng.uniform(0, 2 * kPi),
                                                     rng.uniform2({-2, -2}, {2, 2}));
        const FullTangent t = vector_field_full(scene, full);
        EXPECT_LE(rel_diff(ReducedTangent{t.dyM, t.dOmega}, red), 1e-9);
      }
    }
  }
}

}  // namespace
}  // namespace rolling
