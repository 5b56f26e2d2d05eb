#pragma once

#include <Eigen/Core>

#include "rotkin/rotation.hpp"

namespace rotkin {

// [[cos a, -sin a], [sin a, cos a]]. Angles are radians, unnormalized;
// 2*pi-periodicity is a property, not a constraint.
Eigen::Matrix2d rot2(double alpha);

// d/dt rot2(a(t)) = [[-sin a, -cos a], [cos a, -sin a]] * a_dot. Units 1/s.
Eigen::Matrix2d rot2_dot(double alpha, double alpha_dot);

// The planar rotation embedded in 3-d with the z-axis out of the plane:
// rot2(alpha) in the top-left block, 1 at (3,3).
RotationMatrix embed_planar(double alpha, FrameId from = kBody, FrameId to = kWorld);

// Cross-checks the planar derivative against the 3-d body-rate form: builds
// Rdot = rdot_body_rate(embed_planar(alpha), alpha_dot * e3) and returns the
// Frobenius distance between its top-left 2x2 block and rot2_dot(alpha,
// alpha_dot). The third row and column of Rdot are checked to be exactly
// zero; a nonzero entry raises NumericalError.
double planar_consistency_check(double alpha, double alpha_dot);

}  // namespace rotkin
