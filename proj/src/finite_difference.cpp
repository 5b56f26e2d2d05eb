#include "rotkin/finite_difference.hpp"

#include <cmath>
#include <sstream>

namespace rotkin {

namespace {

void require_window(const TrajectoryFunction& f, double t, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw InvalidInputError("central_difference: h must be positive and finite");
  }
  if (!std::isfinite(t)) {
    throw InvalidInputError("central_difference: non-finite t");
  }
  if (t - h < f.t_min || t + h > f.t_max) {
    std::ostringstream msg;
    msg << "central_difference: window [" << t - h << ", " << t + h << "] leaves domain ["
        << f.t_min << ", " << f.t_max << "]";
    throw DomainError(msg.str());
  }
}

struct ErrorSample {
  double analytic_error;
  double skewness;
};

// One finite-difference-vs-analytic comparison at step h.
template <typename AnalyticFn, typename RateMatrixFn>
ErrorSample sample_errors(const TrajectoryFunction& f, double t, double h,
                          const AnalyticFn& analytic, const RateMatrixFn& rate_matrix) {
  const Eigen::Matrix3d d = central_difference(f, t, h);
  return ErrorSample{(d - analytic()).norm(), skewness_defect(rate_matrix(d))};
}

template <typename AnalyticFn, typename RateMatrixFn>
DerivativeCheckReport run_check(const TrajectoryFunction& f, double t, double h,
                                const AnalyticFn& analytic, const RateMatrixFn& rate_matrix) {
  const ErrorSample coarse = sample_errors(f, t, h, analytic, rate_matrix);
  const ErrorSample fine = sample_errors(f, t, h / 2.0, analytic, rate_matrix);

  DerivativeCheckReport report;
  report.t = t;
  report.h = h;
  report.analytic_error = coarse.analytic_error;
  report.skewness_defect = coarse.skewness;
  if (coarse.analytic_error == 0.0 || fine.analytic_error == 0.0) {
    report.order_estimate = 0.0;
    report.exact_match = coarse.analytic_error == 0.0 && fine.analytic_error == 0.0;
  } else {
    report.order_estimate = std::log2(coarse.analytic_error / fine.analytic_error);
  }
  return report;
}

}  // namespace

Eigen::Matrix3d central_difference(const TrajectoryFunction& f, double t, double h) {
  require_window(f, t, h);
  return (f.attitude(t + h).matrix() - f.attitude(t - h).matrix()) / (2.0 * h);
}

DerivativeCheckReport check_against_world_rate(const TrajectoryFunction& f,
                                               const RateFunction& w_world, double t,
                                               double h) {
  const RotationMatrix r = f.attitude(t);
  const auto analytic = [&] { return rdot_world_rate(r, w_world(t)).value; };
  const auto rate_matrix = [&](const Eigen::Matrix3d& d) -> Eigen::Matrix3d {
    return d * r.matrix().transpose();
  };
  return run_check(f, t, h, analytic, rate_matrix);
}

DerivativeCheckReport check_against_body_rate(const TrajectoryFunction& f,
                                              const RateFunction& w_body, double t, double h) {
  const RotationMatrix r = f.attitude(t);
  const auto analytic = [&] { return rdot_body_rate(r, w_body(t)).value; };
  const auto rate_matrix = [&](const Eigen::Matrix3d& d) -> Eigen::Matrix3d {
    return r.matrix().transpose() * d;
  };
  return run_check(f, t, h, analytic, rate_matrix);
}

}  // namespace rotkin
