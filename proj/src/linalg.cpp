#include "rolling/linalg.hpp"

#include <cmath>
#include <limits>

#include <Eigen/SVD>

namespace rolling {

Mat3 hat(const Vec3& v) {
  Mat3 m;
  m << 0.0, -v(2), v(1),
       v(2), 0.0, -v(0),
       -v(1), v(0), 0.0;
  return m;
}

Mat3 so3_exp(const Vec3& v) {
  const double theta2 = v.squaredNorm();
  const Mat3 K = hat(v);
  double a;  // sin(theta) / theta
  double b;  // (1 - cos(theta)) / theta^2
  if (theta2 < 1e-8) {
    a = 1.0 - theta2 / 6.0 + theta2 * theta2 / 120.0;
    b = 0.5 - theta2 / 24.0 + theta2 * theta2 / 720.0;
  } else {
    const double theta = std::sqrt(theta2);
    a = std::sin(theta) / theta;
    b = (1.0 - std::cos(theta)) / theta2;
  }
  return Mat3::Identity() + a * K + b * K * K;
}

Vec3 dexp_inv(const Vec3& u, const Vec3& omega) {
  const Vec3 uw = u.cross(omega);
  return omega + 0.5 * uw + u.cross(uw) / 12.0;
}

double condition_number(const Mat2& m) {
  Eigen::JacobiSVD<Mat2> svd(m);
  const auto& sv = svd.singularValues();
  if (!(sv(1) > 0.0)) return std::numeric_limits<double>::infinity();
  return sv(0) / sv(1);
}

}  // namespace rolling
