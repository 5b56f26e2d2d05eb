#pragma once

#include <Eigen/Core>

#include "rotkin/errors.hpp"

namespace rotkin {

// 3x3 skew-symmetric matrix stored as its 3 independent entries, so that
// S + S^T = 0 holds by construction rather than by runtime check.
class SkewMatrix {
 public:
  // Throws InvalidInputError if w has non-finite components.
  explicit SkewMatrix(const Eigen::Vector3d& w);

  const Eigen::Vector3d& vector() const { return w_; }

  // Materializes
  //   [  0  -w3   w2 ]
  //   [  w3   0  -w1 ]
  //   [ -w2  w1    0 ].
  Eigen::Matrix3d matrix() const;

  // matrix() * x, which equals the cross product vector() x x.
  Eigen::Vector3d apply(const Eigen::Vector3d& x) const;

 private:
  Eigen::Vector3d w_;
};

SkewMatrix skew(const Eigen::Vector3d& w);

// Exact inverse of skew(): reads (S32, S13, S21).
Eigen::Vector3d unskew(const SkewMatrix& s);

// ||M + M^T||_F, the distance of M from exact skew-symmetry.
double skewness_defect(const Eigen::Matrix3d& m);

// Projects a numerically computed matrix onto its skew part (M - M^T)/2,
// provided the skewness defect does not exceed tol. Throws NotSkewError
// (carrying the defect) otherwise.
SkewMatrix skew_to_nearest(const Eigen::Matrix3d& raw, double tol);

}  // namespace rotkin
