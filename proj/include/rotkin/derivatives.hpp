#pragma once

#include <Eigen/Core>

#include "rotkin/rotation.hpp"

namespace rotkin {

// Time derivative of a rotation matrix (entries in 1/s). Tags record which
// frame pair the differentiated rotation maps between; they are advisory at
// construction and only enforced when a rate is recovered. Tangency to the
// group is likewise a property of recovery, not of construction, so that
// numerically obtained derivatives are representable before being judged.
struct RotationDerivative {
  Eigen::Matrix3d value;
  FrameId from;
  FrameId to;
};

// The four derivative forms. R maps body->world (generically from->to);
// r_inv maps world->body. Each throws FrameMismatchError if the rate is
// expressed in the wrong frame.
//
// Rdot            =  [w_world]x * R          (world-rate form)
RotationDerivative rdot_world_rate(const RotationMatrix& r, const AngularVelocity& w_world);
// Rdot            =  R * [w_body]x           (body-rate form, IMU-fed)
RotationDerivative rdot_body_rate(const RotationMatrix& r, const AngularVelocity& w_body);
// d/dt(R^-1)      = -R^-1 * [w_world]x
RotationDerivative rdot_inverse_world_rate(const RotationMatrix& r_inv,
                                           const AngularVelocity& w_world);
// d/dt(R^-1)      = -[w_body]x * R^-1
RotationDerivative rdot_inverse_body_rate(const RotationMatrix& r_inv,
                                          const AngularVelocity& w_body);

inline constexpr double kDefaultRecoveryTol = 1e-9;

// Recovers the world-frame rate from Rdot * R^T. Throws
// InconsistentDerivativeError (carrying the defect) if Rdot * R^T departs
// from skew-symmetry by more than tol, i.e. Rdot is not tangent to the
// rotation group at R.
AngularVelocity world_rate_from_rdot(const RotationMatrix& r, const RotationDerivative& rdot,
                                     double tol = kDefaultRecoveryTol);

// Recovers the body-frame rate from R^T * Rdot.
AngularVelocity body_rate_from_rdot(const RotationMatrix& r, const RotationDerivative& rdot,
                                    double tol = kDefaultRecoveryTol);

}  // namespace rotkin
