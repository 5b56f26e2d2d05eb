#include "rotkin/rotation.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/LU>

namespace rotkin {

namespace {

std::string frame_pair(FrameId from, FrameId to) {
  std::ostringstream s;
  s << "'" << from.name() << "'->'" << to.name() << "'";
  return s.str();
}

}  // namespace

RotationMatrix validate_rotation(const Eigen::Matrix3d& m, FrameId from, FrameId to,
                                 double orth_tol, double det_tol) {
  if (!m.allFinite()) {
    throw InvalidInputError("validate_rotation: matrix has non-finite entries");
  }
  const double orth_defect = (m * m.transpose() - Eigen::Matrix3d::Identity()).norm();
  if (!(orth_defect <= orth_tol)) {
    std::ostringstream msg;
    msg << "validate_rotation: orthogonality defect " << orth_defect << " exceeds tolerance "
        << orth_tol << " for " << frame_pair(from, to);
    throw NotOrthogonalError(msg.str(), orth_defect);
  }
  const double det = m.determinant();
  if (det <= 0.0 || std::abs(det - 1.0) > det_tol) {
    std::ostringstream msg;
    msg << "validate_rotation: determinant " << det << " is not +1 within " << det_tol
        << " for " << frame_pair(from, to);
    throw ImproperRotationError(msg.str(), det);
  }
  if (from == to) {
    // Equal tags are only a degenerate label for the identity.
    const double id_defect = (m - Eigen::Matrix3d::Identity()).norm();
    if (!(id_defect <= orth_tol)) {
      throw InvalidInputError(
          "validate_rotation: non-identity rotation tagged with equal frames '" +
          std::string(from.name()) + "'");
    }
  }
  return RotationMatrix::trusted(m, from, to);
}

FramedVector transform_point(const RotationMatrix& r, const FramedVector& p) {
  if (p.frame != r.from_frame()) {
    throw FrameMismatchError("transform_point: point in '" + std::string(p.frame.name()) +
                             "' but rotation maps from '" + std::string(r.from_frame().name()) +
                             "'");
  }
  return FramedVector{r.matrix() * p.value, r.to_frame()};
}

AngularVelocity transform_angular_velocity(const RotationMatrix& r, const AngularVelocity& w) {
  if (w.expressed_in != r.from_frame()) {
    throw FrameMismatchError("transform_angular_velocity: rate in '" +
                             std::string(w.expressed_in.name()) + "' but rotation maps from '" +
                             std::string(r.from_frame().name()) + "'");
  }
  return AngularVelocity{r.matrix() * w.rad_per_s, r.to_frame()};
}

FramedVector apply_skew(const FramedVector& w, const FramedVector& x) {
  if (w.frame != x.frame) {
    throw FrameMismatchError("apply_skew: operands in '" + std::string(w.frame.name()) +
                             "' and '" + std::string(x.frame.name()) + "'");
  }
  return FramedVector{skew(w.value).apply(x.value), w.frame};
}

SkewMatrix conjugate_skew(const RotationMatrix& r, const Eigen::Vector3d& w) {
  return skew(r.matrix() * w);
}

Eigen::Matrix3d conjugate_skew_matrix(const RotationMatrix& r, const Eigen::Vector3d& w) {
  return r.matrix() * skew(w).matrix() * r.matrix().transpose();
}

RotationMatrix compose(const RotationMatrix& outer, const RotationMatrix& inner) {
  if (outer.from_frame() != inner.to_frame()) {
    throw FrameMismatchError("compose: inner maps to '" + std::string(inner.to_frame().name()) +
                             "' but outer maps from '" + std::string(outer.from_frame().name()) +
                             "'");
  }
  return RotationMatrix::trusted(outer.matrix() * inner.matrix(), inner.from_frame(),
                                 outer.to_frame());
}

}  // namespace rotkin
