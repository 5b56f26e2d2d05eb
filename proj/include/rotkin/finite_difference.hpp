#pragma once

#include <functional>

#include <Eigen/Core>

#include "rotkin/derivatives.hpp"

namespace rotkin {

// A deterministic time-indexed attitude trajectory on [t_min, t_max].
// Evaluation must be a pure function of t.
struct TrajectoryFunction {
  std::function<RotationMatrix(double)> attitude;
  double t_min = 0.0;
  double t_max = 1.0;
};

// Analytic angular rate paired with a trajectory (world- or body-frame).
using RateFunction = std::function<AngularVelocity(double)>;

// Outcome of checking an analytic derivative formula against a central
// difference at (t, h).
struct DerivativeCheckReport {
  double t = 0.0;
  double h = 0.0;
  double analytic_error = 0.0;   // ||D - Rdot_analytic||_F at step h
  double skewness_defect = 0.0;  // of the numerically formed rate matrix
  double order_estimate = 0.0;   // log2(err(h) / err(h/2)); 0 when exact
  bool exact_match = false;      // both errors were exactly zero
};

// (f(t+h) - f(t-h)) / (2h). Throws DomainError if [t-h, t+h] leaves the
// trajectory's domain and InvalidInputError for h <= 0.
Eigen::Matrix3d central_difference(const TrajectoryFunction& f, double t, double h);

// Compares the central difference against [w_world]x * R. The skewness
// defect is measured on D * R^T, the numerical world-rate matrix. The order
// estimate always uses the pair {h, h/2}.
DerivativeCheckReport check_against_world_rate(const TrajectoryFunction& f,
                                               const RateFunction& w_world, double t,
                                               double h = 1e-5);

// Compares the central difference against R * [w_body]x. The skewness defect
// is measured on R^T * D.
DerivativeCheckReport check_against_body_rate(const TrajectoryFunction& f,
                                              const RateFunction& w_body, double t,
                                              double h = 1e-5);

}  // namespace rotkin
