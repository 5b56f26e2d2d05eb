#include "rotkin/planar.hpp"

#include <cmath>

#include "rotkin/derivatives.hpp"

namespace rotkin {

namespace {

void require_finite(double x, const char* op) {
  if (!std::isfinite(x)) {
    throw InvalidInputError(std::string(op) + ": non-finite argument");
  }
}

}  // namespace

Eigen::Matrix2d rot2(double alpha) {
  require_finite(alpha, "rot2");
  const double c = std::cos(alpha);
  const double s = std::sin(alpha);
  Eigen::Matrix2d r;
  r << c, -s, s, c;
  return r;
}

Eigen::Matrix2d rot2_dot(double alpha, double alpha_dot) {
  require_finite(alpha, "rot2_dot");
  require_finite(alpha_dot, "rot2_dot");
  const double c = std::cos(alpha);
  const double s = std::sin(alpha);
  Eigen::Matrix2d d;
  d << -s, -c, c, -s;
  return d * alpha_dot;
}

RotationMatrix embed_planar(double alpha, FrameId from, FrameId to) {
  require_finite(alpha, "embed_planar");
  Eigen::Matrix3d m = Eigen::Matrix3d::Identity();
  m.topLeftCorner<2, 2>() = rot2(alpha);
  return RotationMatrix::trusted(m, from, to);
}

double planar_consistency_check(double alpha, double alpha_dot) {
  require_finite(alpha, "planar_consistency_check");
  require_finite(alpha_dot, "planar_consistency_check");
  const RotationMatrix r = embed_planar(alpha);
  const AngularVelocity w{Eigen::Vector3d(0.0, 0.0, alpha_dot), r.from_frame()};
  const Eigen::Matrix3d rdot = rdot_body_rate(r, w).value;
  for (int k = 0; k < 3; ++k) {
    if (std::abs(rdot(2, k)) != 0.0 || std::abs(rdot(k, 2)) != 0.0) {
      throw NumericalError(
          "planar_consistency_check: derivative leaks out of the rotation plane");
    }
  }
  return (rdot.topLeftCorner<2, 2>() - rot2_dot(alpha, alpha_dot)).norm();
}

}  // namespace rotkin
