#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace rolling {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;
using Mat32 = Eigen::Matrix<double, 3, 2>;

/// Skew matrix with hat(v) * w == v.cross(w).
Mat3 hat(const Vec3& v);

/// Rodrigues exponential of hat(v).
Mat3 so3_exp(const Vec3& v);

/// Inverse of the left-trivialized differential of exp, truncated after the
/// second bracket. Used by the Lie-group Runge-Kutta stages.
Vec3 dexp_inv(const Vec3& u, const Vec3& omega);

/// Ratio of largest to smallest singular value; +inf when singular.
double condition_number(const Mat2& m);

/// World "up" direction; gravity acts along -k.
inline Vec3 unit_k() { return Vec3::UnitZ(); }

}  // namespace rolling
