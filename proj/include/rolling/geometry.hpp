#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>

#include "rolling/linalg.hpp"

namespace rolling {

/// Closed rectangle of admissible chart coordinates. Points on the boundary
/// count as outside.
struct ChartDomain {
  Vec2 lo{-1e6, -1e6};
  Vec2 hi{1e6, 1e6};

  bool contains(const Vec2& y) const {
    return y(0) > lo(0) && y(0) < hi(0) && y(1) > lo(1) && y(1) < hi(1);
  }
};

enum class ChartKind { Plane, Sphere, Ellipsoid, Paraboloid, Custom };

/// A single parametric patch y -> s(y) in R^3 with analytic first and second
/// derivatives. The orientation sign multiplies the cross-product normal
/// ds/dy1 x ds/dy2.
class SurfaceChart {
 public:
  using EvalFn = std::function<Vec3(const Vec2&)>;
  using JacobianFn = std::function<Mat32(const Vec2&)>;
  /// One symmetric 2x2 block per ambient component.
  using Hessian = std::array<Mat2, 3>;
  using HessianFn = std::function<Hessian(const Vec2&)>;

  SurfaceChart(std::string name, ChartKind kind, EvalFn eval, JacobianFn jacobian,
               HessianFn hessian, ChartDomain domain, int orientation);

  static SurfaceChart plane(int orientation = -1);
  static SurfaceChart sphere(double radius, const Vec3& center = Vec3::Zero(),
                             int orientation = 1);
  static SurfaceChart ellipsoid(double a, double b, double c,
                                const Vec3& center = Vec3::Zero(), int orientation = 1);
  /// s(u, v) = (u, v, offset + curvature * (u^2 + v^2)).
  static SurfaceChart paraboloid(double curvature, double offset = 0.0,
                                 int orientation = 1);

  Vec3 eval(const Vec2& y) const { return eval_(y); }
  Mat32 jacobian(const Vec2& y) const { return jacobian_(y); }
  Hessian hessian(const Vec2& y) const { return hessian_(y); }

  const std::string& name() const { return name_; }
  ChartKind kind() const { return kind_; }
  const ChartDomain& domain() const { return domain_; }
  int orientation() const { return orientation_; }
  bool contains(const Vec2& y) const { return domain_.contains(y); }

  SurfaceChart with_orientation(int orientation) const;
  SurfaceChart with_domain(const ChartDomain& domain) const;

 private:
  std::string name_;
  ChartKind kind_;
  EvalFn eval_;
  JacobianFn jacobian_;
  HessianFn hessian_;
  ChartDomain domain_;
  int orientation_;
};

/// Named numeric parameters for the built-in charts, as read from scenario
/// files. Vector parameters are flattened (center -> center.x, ...).
using ChartParams = std::map<std::string, double>;

/// Builds "plane", "sphere", "ellipsoid" or "paraboloid". Throws
/// RollingError(ConfigError) for unknown names or bad parameters.
SurfaceChart make_chart(const std::string& name, const ChartParams& params,
                        int orientation);

struct TangentFrame {
  Vec3 e1;
  Vec3 e2;
  Vec3 n;
  /// Maps chart velocities dy to frame components (e1, e2) of J dy.
  Mat2 chart_to_frame;

  Mat32 basis() const {
    Mat32 b;
    b << e1, e2;
    return b;
  }
};

Vec3 normal(const SurfaceChart& chart, const Vec2& y);
Mat2 first_form(const SurfaceChart& chart, const Vec2& y);
Mat2 second_form(const SurfaceChart& chart, const Vec2& y);

/// Mixed-index Weingarten map, column a holding the chart components of
/// W (ds/dy^a).
Mat2 shape_operator(const SurfaceChart& chart, const Vec2& y);

/// Weingarten map as a 3x3 ambient matrix: W ds/dy^a = L^b_a ds/dy^b and
/// W n = 0.
Mat3 weingarten_ambient(const SurfaceChart& chart, const Vec2& y);

/// Gram-Schmidt frame on the jacobian columns, with e2 flipped when needed
/// so that e1 x e2 equals the oriented unit normal.
TangentFrame tangent_frame(const SurfaceChart& chart, const Vec2& y);

/// A rotation R with R u = w. theta post-composes a rotation about w, so the
/// full circle of such rotations is covered by theta in [0, 2 pi).
Mat3 rotation_aligning(const Vec3& u, const Vec3& w, double theta);

}  // namespace rolling
