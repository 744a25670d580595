#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include "rolling/body.hpp"
#include "rolling/sampling.hpp"

namespace rolling {
namespace {

RigidBody uniform_sphere(double m, double r) {
  return RigidBody(m, 0.4 * m * r * r * Mat3::Identity(), SurfaceChart::sphere(r));
}

TEST(AugmentedInertia, ZeroOffsetIsInertia) {
  const RigidBody body(2.0, Vec3(1.0, 2.0, 3.0).asDiagonal(), SurfaceChart::sphere(1.0));
  EXPECT_TRUE(augmented_inertia(body, Vec3::Zero()).isApprox(body.inertia));
}

TEST(AugmentedInertia, UniformSphereAboutContact) {
  const double m = 1.7, r = 0.45;
  const RigidBody body = uniform_sphere(m, r);
  const Mat3 expected = Vec3(1.4, 1.4, 0.4).asDiagonal() * (m * r * r);
  EXPECT_LE((augmented_inertia(body, Vec3(0, 0, -r)) - expected).norm(), 1e-15);
}

TEST(AugmentedInertia, ParallelAxisIdentity) {
  Rng rng(7);
  for (int i = 0; i < 20; ++i) {
    const Vec3 s = rng.uniform3(-2, 2);
    const RigidBody body(0.8, Vec3(0.3, 0.5, 0.9).asDiagonal(), SurfaceChart::sphere(1.0));
    const Mat3 diff = augmented_inertia(body, s) - body.inertia;
    const Mat3 expected = 0.8 * (s.squaredNorm() * Mat3::Identity() - s * s.transpose());
    EXPECT_LE((diff - expected).norm(), 1e-14);
    Eigen::SelfAdjointEigenSolver<Mat3> es(diff);
    EXPECT_GE(es.eigenvalues().minCoeff(), -1e-14);
  }
}

TEST(AugmentedInertia, SpdForRandomBodies) {
  Rng rng(99);
  for (int i = 0; i < 1000; ++i) {
    Mat3 G;
    for (int r = 0; r < 3; ++r) G.row(r) = rng.uniform3(-1, 1).transpose();
    const Mat3 I = G * G.transpose() + 0.05 * Mat3::Identity();
    const double m = rng.uniform(0.1, 5.0);
    const RigidBody body(m, I, SurfaceChart::sphere(1.0));
    const Mat3 It = augmented_inertia(body, rng.uniform3(-3, 3));
    EXPECT_LE((It - It.transpose()).norm(), 1e-14);
    const double lo_I = Eigen::SelfAdjointEigenSolver<Mat3>(I).eigenvalues().minCoeff();
    const double lo_It = Eigen::SelfAdjointEigenSolver<Mat3>(It).eigenvalues().minCoeff();
    EXPECT_GE(lo_It, lo_I - 1e-12);
  }
}

TEST(SolidEllipsoidInertia, SphereLimit) {
  EXPECT_TRUE(solid_ellipsoid_inertia(2.0, 0.5, 0.5, 0.5).isApprox(0.2 * Mat3::Identity()));
  const Mat3 I = solid_ellipsoid_inertia(5.0, 1.0, 2.0, 3.0);
  EXPECT_DOUBLE_EQ(I(0, 0), 13.0);
  EXPECT_DOUBLE_EQ(I(1, 1), 10.0);
  EXPECT_DOUBLE_EQ(I(2, 2), 5.0);
}

}  // namespace
}  // namespace rolling
