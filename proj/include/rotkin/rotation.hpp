#pragma once

#include <Eigen/Core>

#include "rotkin/frames.hpp"
#include "rotkin/skew.hpp"

namespace rotkin {

// A 3-vector together with the frame its coordinates are expressed in.
// Units depend on context (meters for points, radians for rotation vectors).
struct FramedVector {
  Eigen::Vector3d value;
  FrameId frame;
};

// Angular velocity in rad/s, tagged with the frame it is expressed in.
struct AngularVelocity {
  Eigen::Vector3d rad_per_s;
  FrameId expressed_in;
};

inline constexpr double kDefaultOrthTol = 1e-9;
inline constexpr double kDefaultDetTol = 1e-9;

// Proper rotation (orthogonal, det = +1) carrying (from, to) frame tags.
// Instances are obtained through validate_rotation() or from operations that
// construct rotations on the group; the entries of a live object always
// satisfy the validation invariants of the factory that created it.
class RotationMatrix {
 public:
  const Eigen::Matrix3d& matrix() const { return m_; }
  FrameId from_frame() const { return from_; }
  FrameId to_frame() const { return to_; }

  // Transpose with swapped frame tags.
  RotationMatrix inverse() const { return RotationMatrix(m_.transpose(), to_, from_); }

  static RotationMatrix identity(FrameId from, FrameId to) {
    return RotationMatrix(Eigen::Matrix3d::Identity(), from, to);
  }

  // Wraps entries the caller guarantees to be on the rotation group
  // (products of validated rotations, closed-form exponentials). No check.
  static RotationMatrix trusted(const Eigen::Matrix3d& m, FrameId from, FrameId to) {
    return RotationMatrix(m, from, to);
  }

 private:
  RotationMatrix(const Eigen::Matrix3d& m, FrameId from, FrameId to)
      : m_(m), from_(from), to_(to) {}

  Eigen::Matrix3d m_;
  FrameId from_;
  FrameId to_;
};

// Checks ||M M^T - I||_F <= orth_tol and |det(M) - 1| <= det_tol and returns
// the tagged rotation. Throws NotOrthogonalError / ImproperRotationError with
// the measured defect, InvalidInputError on non-finite entries or a
// non-identity matrix tagged with equal frames.
RotationMatrix validate_rotation(const Eigen::Matrix3d& m, FrameId from, FrameId to,
                                 double orth_tol = kDefaultOrthTol,
                                 double det_tol = kDefaultDetTol);

// P_to = R * P_from. Throws FrameMismatchError unless p.frame == r.from_frame().
FramedVector transform_point(const RotationMatrix& r, const FramedVector& p);

// w_to = R * w_from; preserves the norm. Throws FrameMismatchError unless
// w.expressed_in == r.from_frame().
AngularVelocity transform_angular_velocity(const RotationMatrix& r, const AngularVelocity& w);

// w x x as the matrix-vector product skew(w) * x. Both arguments must share
// a frame tag.
FramedVector apply_skew(const FramedVector& w, const FramedVector& x);

// skew(R * w).
SkewMatrix conjugate_skew(const RotationMatrix& r, const Eigen::Vector3d& w);

// R * skew(w) * R^T, the algebraic route the conjugation property compares
// conjugate_skew() against.
Eigen::Matrix3d conjugate_skew_matrix(const RotationMatrix& r, const Eigen::Vector3d& w);

// Chains two transforms: (B->A) o (C->B) -> (C->A). Throws FrameMismatchError
// unless outer.from_frame() == inner.to_frame().
RotationMatrix compose(const RotationMatrix& outer, const RotationMatrix& inner);

}  // namespace rotkin
