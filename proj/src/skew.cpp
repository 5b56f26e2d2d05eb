#include "rotkin/skew.hpp"

#include <cmath>
#include <sstream>

namespace rotkin {

namespace {

bool finite(const Eigen::Vector3d& v) {
  return std::isfinite(v.x()) && std::isfinite(v.y()) && std::isfinite(v.z());
}

}  // namespace

SkewMatrix::SkewMatrix(const Eigen::Vector3d& w) : w_(w) {
  if (!finite(w)) {
    throw InvalidInputError("skew: vector has non-finite components");
  }
}

Eigen::Matrix3d SkewMatrix::matrix() const {
  Eigen::Matrix3d s;
  // clang-format off
  s <<    0.0, -w_.z(),  w_.y(),
       w_.z(),     0.0, -w_.x(),
      -w_.y(),  w_.x(),     0.0;
  // clang-format on
  return s;
}

Eigen::Vector3d SkewMatrix::apply(const Eigen::Vector3d& x) const { return matrix() * x; }

SkewMatrix skew(const Eigen::Vector3d& w) { return SkewMatrix(w); }

Eigen::Vector3d unskew(const SkewMatrix& s) { return s.vector(); }

double skewness_defect(const Eigen::Matrix3d& m) {
  return (m + m.transpose()).norm();
}

SkewMatrix skew_to_nearest(const Eigen::Matrix3d& raw, double tol) {
  if (!(tol >= 0.0)) {
    throw InvalidInputError("skew_to_nearest: tolerance must be >= 0");
  }
  const double defect = skewness_defect(raw);
  if (!(defect <= tol)) {
    std::ostringstream msg;
    msg << "skew_to_nearest: skewness defect " << defect << " exceeds tolerance " << tol;
    throw NotSkewError(msg.str(), defect);
  }
  const Eigen::Matrix3d s = 0.5 * (raw - raw.transpose());
  return SkewMatrix(Eigen::Vector3d(s(2, 1), s(0, 2), s(1, 0)));
}

}  // namespace rotkin
