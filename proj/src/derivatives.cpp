#include "rotkin/derivatives.hpp"

#include <string>

namespace rotkin {

namespace {

void require_frame(const AngularVelocity& w, FrameId expected, const char* op) {
  if (w.expressed_in != expected) {
    throw FrameMismatchError(std::string(op) + ": rate expressed in '" +
                             std::string(w.expressed_in.name()) + "', expected '" +
                             std::string(expected.name()) + "'");
  }
}

void require_tags(const RotationDerivative& rdot, const RotationMatrix& r, const char* op) {
  if (rdot.from != r.from_frame() || rdot.to != r.to_frame()) {
    throw FrameMismatchError(std::string(op) + ": derivative tagged '" +
                             std::string(rdot.from.name()) + "'->'" +
                             std::string(rdot.to.name()) + "' does not match rotation '" +
                             std::string(r.from_frame().name()) + "'->'" +
                             std::string(r.to_frame().name()) + "'");
  }
}

}  // namespace

RotationDerivative rdot_world_rate(const RotationMatrix& r, const AngularVelocity& w_world) {
  require_frame(w_world, r.to_frame(), "rdot_world_rate");
  return RotationDerivative{skew(w_world.rad_per_s).matrix() * r.matrix(), r.from_frame(),
                            r.to_frame()};
}

RotationDerivative rdot_body_rate(const RotationMatrix& r, const AngularVelocity& w_body) {
  require_frame(w_body, r.from_frame(), "rdot_body_rate");
  return RotationDerivative{r.matrix() * skew(w_body.rad_per_s).matrix(), r.from_frame(),
                            r.to_frame()};
}

RotationDerivative rdot_inverse_world_rate(const RotationMatrix& r_inv,
                                           const AngularVelocity& w_world) {
  require_frame(w_world, r_inv.from_frame(), "rdot_inverse_world_rate");
  return RotationDerivative{-(r_inv.matrix() * skew(w_world.rad_per_s).matrix()),
                            r_inv.from_frame(), r_inv.to_frame()};
}

RotationDerivative rdot_inverse_body_rate(const RotationMatrix& r_inv,
                                          const AngularVelocity& w_body) {
  require_frame(w_body, r_inv.to_frame(), "rdot_inverse_body_rate");
  return RotationDerivative{-(skew(w_body.rad_per_s).matrix() * r_inv.matrix()),
                            r_inv.from_frame(), r_inv.to_frame()};
}

namespace {

Eigen::Vector3d reduce_to_rate(const Eigen::Matrix3d& rate_matrix, double tol, const char* op) {
  try {
    return unskew(skew_to_nearest(rate_matrix, tol));
  } catch (const NotSkewError& e) {
    throw InconsistentDerivativeError(
        std::string(op) + ": derivative is not tangent to the rotation group (defect " +
            std::to_string(e.defect()) + " > tolerance " + std::to_string(tol) + ")",
        e.defect());
  }
}

}  // namespace

AngularVelocity world_rate_from_rdot(const RotationMatrix& r, const RotationDerivative& rdot,
                                     double tol) {
  require_tags(rdot, r, "world_rate_from_rdot");
  const Eigen::Matrix3d s = rdot.value * r.matrix().transpose();
  return AngularVelocity{reduce_to_rate(s, tol, "world_rate_from_rdot"), r.to_frame()};
}

AngularVelocity body_rate_from_rdot(const RotationMatrix& r, const RotationDerivative& rdot,
                                    double tol) {
  require_tags(rdot, r, "body_rate_from_rdot");
  const Eigen::Matrix3d s = r.matrix().transpose() * rdot.value;
  return AngularVelocity{reduce_to_rate(s, tol, "body_rate_from_rdot"), r.from_frame()};
}

}  // namespace rotkin
