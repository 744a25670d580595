#include "rolling/geometry.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include <Eigen/LU>

#include "rolling/errors.hpp"

namespace rolling {

namespace {

constexpr double kDegenerateNormal = 1e-12;
constexpr double kDegenerateMetric = 1e-18;
constexpr double kPoleMargin = 1e-3;

SurfaceChart::Hessian zero_hessian() {
  return {Mat2::Zero(), Mat2::Zero(), Mat2::Zero()};
}

// Spherical-coordinate patch scaled per axis; covers both the sphere
// (equal radii) and the triaxial ellipsoid.
SurfaceChart scaled_sphere(std::string name, ChartKind kind, const Vec3& radii,
                           const Vec3& center, int orientation) {
  auto eval = [radii, center](const Vec2& y) -> Vec3 {
    const double st = std::sin(y(0)), ct = std::cos(y(0));
    const double sp = std::sin(y(1)), cp = std::cos(y(1));
    return center + radii.cwiseProduct(Vec3(st * cp, st * sp, ct));
  };
  auto jac = [radii](const Vec2& y) -> Mat32 {
    const double st = std::sin(y(0)), ct = std::cos(y(0));
    const double sp = std::sin(y(1)), cp = std::cos(y(1));
    Mat32 J;
    J.col(0) = radii.cwiseProduct(Vec3(ct * cp, ct * sp, -st));
    J.col(1) = radii.cwiseProduct(Vec3(-st * sp, st * cp, 0.0));
    return J;
  };
  auto hess = [radii](const Vec2& y) -> SurfaceChart::Hessian {
    const double st = std::sin(y(0)), ct = std::cos(y(0));
    const double sp = std::sin(y(1)), cp = std::cos(y(1));
    const Vec3 tt = radii.cwiseProduct(Vec3(-st * cp, -st * sp, -ct));
    const Vec3 tp = radii.cwiseProduct(Vec3(-ct * sp, ct * cp, 0.0));
    const Vec3 pp = radii.cwiseProduct(Vec3(-st * cp, -st * sp, 0.0));
    SurfaceChart::Hessian h;
    for (int k = 0; k < 3; ++k) {
      h[k] << tt(k), tp(k), tp(k), pp(k);
    }
    return h;
  };
  ChartDomain domain{Vec2(kPoleMargin, -1e6), Vec2(std::numbers::pi - kPoleMargin, 1e6)};
  return SurfaceChart(std::move(name), kind, eval, jac, hess, domain, orientation);
}

double require_positive(const ChartParams& params, const std::string& chart,
                        const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) {
    throw RollingError(ErrorKind::ConfigError, chart + " requires parameter '" + key + "'");
  }
  if (!(it->second > 0.0)) {
    throw RollingError(ErrorKind::ConfigError,
                       chart + " parameter '" + key + "' must be positive");
  }
  return it->second;
}

double optional_param(const ChartParams& params, const std::string& key, double fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

void reject_unknown(const ChartParams& params, const std::string& chart,
                    std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : params) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) {
      throw RollingError(ErrorKind::ConfigError,
                         "unknown parameter '" + key + "' for surface " + chart);
    }
  }
}

Vec3 center_param(const ChartParams& params) {
  return Vec3(optional_param(params, "center.x", 0.0), optional_param(params, "center.y", 0.0),
              optional_param(params, "center.z", 0.0));
}

// Rotation taking unit u to unit w along the great circle; needs u.w > -1.
Mat3 minimal_rotation(const Vec3& u, const Vec3& w) {
  const Mat3 K = hat(u.cross(w));
  return Mat3::Identity() + K + K * K / (1.0 + u.dot(w));
}

}  // namespace

SurfaceChart::SurfaceChart(std::string name, ChartKind kind, EvalFn eval, JacobianFn jacobian,
                           HessianFn hessian, ChartDomain domain, int orientation)
    : name_(std::move(name)),
      kind_(kind),
      eval_(std::move(eval)),
      jacobian_(std::move(jacobian)),
      hessian_(std::move(hessian)),
      domain_(domain),
      orientation_(orientation >= 0 ? 1 : -1) {}

SurfaceChart SurfaceChart::plane(int orientation) {
  auto eval = [](const Vec2& y) -> Vec3 { return Vec3(y(0), y(1), 0.0); };
  auto jac = [](const Vec2&) -> Mat32 {
    Mat32 J;
    J << 1.0, 0.0, 0.0, 1.0, 0.0, 0.0;
    return J;
  };
  auto hess = [](const Vec2&) { return zero_hessian(); };
  return SurfaceChart("plane", ChartKind::Plane, eval, jac, hess, ChartDomain{}, orientation);
}

SurfaceChart SurfaceChart::sphere(double radius, const Vec3& center, int orientation) {
  return scaled_sphere("sphere", ChartKind::Sphere, Vec3::Constant(radius), center, orientation);
}

SurfaceChart SurfaceChart::ellipsoid(double a, double b, double c, const Vec3& center,
                                     int orientation) {
  return scaled_sphere("ellipsoid", ChartKind::Ellipsoid, Vec3(a, b, c), center, orientation);
}

SurfaceChart SurfaceChart::paraboloid(double curvature, double offset, int orientation) {
  auto eval = [curvature, offset](const Vec2& y) -> Vec3 {
    return Vec3(y(0), y(1), offset + curvature * y.squaredNorm());
  };
  auto jac = [curvature](const Vec2& y) -> Mat32 {
    Mat32 J;
    J << 1.0, 0.0, 0.0, 1.0, 2.0 * curvature * y(0), 2.0 * curvature * y(1);
    return J;
  };
  auto hess = [curvature](const Vec2&) {
    auto h = zero_hessian();
    h[2] = 2.0 * curvature * Mat2::Identity();
    return h;
  };
  ChartDomain domain{Vec2(-1e3, -1e3), Vec2(1e3, 1e3)};
  return SurfaceChart("paraboloid", ChartKind::Paraboloid, eval, jac, hess, domain, orientation);
}

SurfaceChart SurfaceChart::with_orientation(int orientation) const {
  SurfaceChart copy = *this;
  copy.orientation_ = orientation >= 0 ? 1 : -1;
  return copy;
}

SurfaceChart SurfaceChart::with_domain(const ChartDomain& domain) const {
  SurfaceChart copy = *this;
  copy.domain_ = domain;
  return copy;
}

SurfaceChart make_chart(const std::string& name, const ChartParams& params, int orientation) {
  if (orientation != 1 && orientation != -1) {
    throw RollingError(ErrorKind::ConfigError, "orientation must be +1 or -1");
  }
  if (name == "plane") {
    reject_unknown(params, name, {});
    return SurfaceChart::plane(orientation);
  }
  if (name == "sphere") {
    reject_unknown(params, name, {"radius", "center.x", "center.y", "center.z"});
    return SurfaceChart::sphere(require_positive(params, name, "radius"), center_param(params),
                                orientation);
  }
  if (name == "ellipsoid") {
    reject_unknown(params, name, {"a", "b", "c", "center.x", "center.y", "center.z"});
    return SurfaceChart::ellipsoid(require_positive(params, name, "a"),
                                   require_positive(params, name, "b"),
                                   require_positive(params, name, "c"), center_param(params),
                                   orientation);
  }
  if (name == "paraboloid") {
    reject_unknown(params, name, {"curvature", "offset"});
    auto it = params.find("curvature");
    if (it == params.end()) {
      throw RollingError(ErrorKind::ConfigError, "paraboloid requires parameter 'curvature'");
    }
    return SurfaceChart::paraboloid(it->second, optional_param(params, "offset", 0.0),
                                    orientation);
  }
  throw RollingError(ErrorKind::ConfigError, "unknown surface '" + name + "'");
}

Vec3 normal(const SurfaceChart& chart, const Vec2& y) {
  const Mat32 J = chart.jacobian(y);
  const Vec3 c = J.col(0).cross(J.col(1));
  const double len = c.norm();
  if (!(len >= kDegenerateNormal)) {
    throw RollingError(ErrorKind::DegenerateChart, chart.name() + " normal vanishes");
  }
  return (chart.orientation() / len) * c;
}

Mat2 first_form(const SurfaceChart& chart, const Vec2& y) {
  const Mat32 J = chart.jacobian(y);
  const Mat2 g = J.transpose() * J;
  if (!(g.determinant() >= kDegenerateMetric)) {
    throw RollingError(ErrorKind::DegenerateChart, chart.name() + " metric is singular");
  }
  return g;
}

Mat2 second_form(const SurfaceChart& chart, const Vec2& y) {
  const Vec3 n = normal(chart, y);
  const auto H = chart.hessian(y);
  return n(0) * H[0] + n(1) * H[1] + n(2) * H[2];
}

Mat2 shape_operator(const SurfaceChart& chart, const Vec2& y) {
  return first_form(chart, y).inverse() * second_form(chart, y);
}

Mat3 weingarten_ambient(const SurfaceChart& chart, const Vec2& y) {
  const Mat32 J = chart.jacobian(y);
  const Mat2 g = first_form(chart, y);
  const Mat2 S = g.inverse() * second_form(chart, y);
  // W J = J S and W n = 0; (J^T J)^{-1} J^T is the left inverse on T_sM.
  return J * S * g.inverse() * J.transpose();
}

TangentFrame tangent_frame(const SurfaceChart& chart, const Vec2& y) {
  const Mat32 J = chart.jacobian(y);
  const double l0 = J.col(0).norm();
  if (!(l0 >= kDegenerateNormal)) {
    throw RollingError(ErrorKind::DegenerateChart, chart.name() + " jacobian column vanishes");
  }
  const Vec3 e1 = J.col(0) / l0;
  const Vec3 t = J.col(1) - J.col(1).dot(e1) * e1;
  const double lt = t.norm();
  if (!(lt >= kDegenerateNormal)) {
    throw RollingError(ErrorKind::DegenerateChart, chart.name() + " jacobian has rank < 2");
  }
  TangentFrame frame;
  frame.e1 = e1;
  frame.e2 = (chart.orientation() / lt) * t;
  frame.n = frame.e1.cross(frame.e2);
  frame.chart_to_frame = frame.basis().transpose() * J;
  return frame;
}

Mat3 rotation_aligning(const Vec3& u, const Vec3& w, double theta) {
  Mat3 base;
  if (1.0 + u.dot(w) > 1e-6) {
    base = minimal_rotation(u, w);
  } else {
    // Half turn about the coordinate axis least aligned with u, projected
    // orthogonal to u; ties go to the lowest index.
    int axis = 0;
    for (int i = 1; i < 3; ++i) {
      if (std::abs(u(i)) < std::abs(u(axis))) axis = i;
    }
    Vec3 a = Vec3::Unit(axis) - u(axis) * u;
    a.normalize();
    const Mat3 half_turn = 2.0 * a * a.transpose() - Mat3::Identity();
    base = minimal_rotation(-u, w) * half_turn;
  }
  return so3_exp(theta * w) * base;
}

}  // namespace rolling
