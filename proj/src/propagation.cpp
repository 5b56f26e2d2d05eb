#include "rotkin/propagation.hpp"

#include <cmath>
#include <exception>
#include <sstream>

#include <Eigen/LU>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rotkin {

std::string_view integrator_name(IntegratorChoice c) {
  switch (c) {
    case IntegratorChoice::kEulerRaw:
      return "euler-raw";
    case IntegratorChoice::kEulerReproject:
      return "euler-reproject";
    case IntegratorChoice::kExpmapBody:
      return "expmap-body";
    case IntegratorChoice::kExpmapWorld:
      return "expmap-world";
  }
  return "unknown";
}

std::optional<IntegratorChoice> integrator_from_name(std::string_view name) {
  for (IntegratorChoice c : kAllIntegrators) {
    if (integrator_name(c) == name) return c;
  }
  return std::nullopt;
}

double orthogonality_error(const Eigen::Matrix3d& m) {
  return (m.transpose() * m - Eigen::Matrix3d::Identity()).norm();
}

void AttitudeTrajectory::append(const TrajectoryPoint& p) {
  if (!std::isfinite(p.t)) {
    throw InvalidInputError("AttitudeTrajectory: non-finite timestamp");
  }
  if (!points_.empty() && !(p.t > points_.back().t)) {
    throw InvalidInputError("AttitudeTrajectory: timestamps must be strictly increasing");
  }
  points_.push_back(p);
}

RotationMatrix AttitudeTrajectory::validated_attitude(std::size_t i, double orth_tol,
                                                      double det_tol) const {
  return validate_rotation(points_.at(i).attitude, from_, to_, orth_tol, det_tol);
}

Eigen::Matrix3d exp_so3_matrix(const Eigen::Vector3d& phi) {
  if (!phi.allFinite()) {
    throw InvalidInputError("exp_so3: non-finite rotation vector");
  }
  const double theta = phi.norm();
  double a;  // sin(t)/t
  double b;  // (1 - cos(t))/t^2
  if (theta < 1e-8) {
    const double t2 = theta * theta;
    a = 1.0 - t2 / 6.0;
    b = 0.5 - t2 / 24.0;
  } else {
    a = std::sin(theta) / theta;
    b = (1.0 - std::cos(theta)) / (theta * theta);
  }
  const Eigen::Matrix3d s = skew(phi).matrix();
  return Eigen::Matrix3d::Identity() + a * s + b * (s * s);
}

RotationMatrix exp_so3(const Eigen::Vector3d& phi, FrameId from, FrameId to) {
  return RotationMatrix::trusted(exp_so3_matrix(phi), from, to);
}

namespace {

void require_step_inputs(const AngularVelocity& w, double dt, FrameId expected,
                         const char* op) {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw InvalidInputError(std::string(op) + ": dt must be positive and finite");
  }
  if (w.expressed_in != expected) {
    throw FrameMismatchError(std::string(op) + ": rate expressed in '" +
                             std::string(w.expressed_in.name()) + "', expected '" +
                             std::string(expected.name()) + "'");
  }
  if (!w.rad_per_s.allFinite()) {
    throw InvalidInputError(std::string(op) + ": non-finite rate");
  }
}

}  // namespace

Eigen::Matrix3d step_euler_body(const RotationMatrix& r, const AngularVelocity& w_body,
                                double dt) {
  require_step_inputs(w_body, dt, r.from_frame(), "step_euler_body");
  return r.matrix() + r.matrix() * skew(w_body.rad_per_s).matrix() * dt;
}

RotationMatrix step_expmap_body(const RotationMatrix& r, const AngularVelocity& w_body,
                                double dt) {
  require_step_inputs(w_body, dt, r.from_frame(), "step_expmap_body");
  return RotationMatrix::trusted(r.matrix() * exp_so3_matrix(w_body.rad_per_s * dt),
                                 r.from_frame(), r.to_frame());
}

RotationMatrix step_expmap_world(const RotationMatrix& r, const AngularVelocity& w_world,
                                 double dt) {
  require_step_inputs(w_world, dt, r.to_frame(), "step_expmap_world");
  return RotationMatrix::trusted(exp_so3_matrix(w_world.rad_per_s * dt) * r.matrix(),
                                 r.from_frame(), r.to_frame());
}

RotationMatrix reorthonormalize(const Eigen::Matrix3d& m, FrameId from, FrameId to) {
  if (!m.allFinite()) {
    throw InvalidInputError("reorthonormalize: non-finite entries");
  }
  const double det = m.determinant();
  if (det <= 0.0) {
    std::ostringstream msg;
    msg << "reorthonormalize: determinant " << det << " is not positive";
    throw ImproperRotationError(msg.str(), det);
  }
  constexpr double kTol = 1e-14;
  constexpr int kMaxIterations = 100;
  Eigen::Matrix3d x = m;
  for (int i = 0; i < kMaxIterations; ++i) {
    if (orthogonality_error(x) <= kTol) {
      return validate_rotation(x, from, to);
    }
    x = 0.5 * (x + x.inverse().transpose().eval());
    if (!x.allFinite()) {
      throw NumericalError("reorthonormalize: iteration diverged");
    }
  }
  throw NumericalError("reorthonormalize: no convergence within 100 iterations");
}

AttitudeTrajectory propagate(const RotationMatrix& r0, std::span<const GyroSample> log,
                             IntegratorChoice method) {
  if (log.empty()) {
    throw InvalidInputError("propagate: empty gyro log");
  }
  for (std::size_t i = 0; i < log.size(); ++i) {
    if (!std::isfinite(log[i].t) || !log[i].w.rad_per_s.allFinite()) {
      throw InvalidInputError("propagate: non-finite sample at index " + std::to_string(i));
    }
    if (i > 0 && !(log[i].t > log[i - 1].t)) {
      throw InvalidInputError("propagate: timestamps not strictly increasing at index " +
                              std::to_string(i));
    }
    if (log[i].w.expressed_in != r0.from_frame()) {
      throw FrameMismatchError("propagate: sample " + std::to_string(i) + " expressed in '" +
                               std::string(log[i].w.expressed_in.name()) +
                               "', expected body frame '" +
                               std::string(r0.from_frame().name()) + "'");
    }
  }

  AttitudeTrajectory traj(r0.from_frame(), r0.to_frame());
  auto record = [&traj](double t, const Eigen::Matrix3d& m) {
    traj.append(TrajectoryPoint{t, m, orthogonality_error(m),
                                std::abs(m.determinant() - 1.0)});
  };

  Eigen::Matrix3d att = r0.matrix();
  record(log[0].t, att);
  for (std::size_t i = 0; i + 1 < log.size(); ++i) {
    const double dt = log[i + 1].t - log[i].t;
    const Eigen::Vector3d& w = log[i].w.rad_per_s;  // held over [t_i, t_i+1]
    switch (method) {
      case IntegratorChoice::kEulerRaw:
        att = att + att * skew(w).matrix() * dt;
        break;
      case IntegratorChoice::kEulerReproject:
        att = reorthonormalize(att + att * skew(w).matrix() * dt, r0.from_frame(),
                               r0.to_frame())
                  .matrix();
        break;
      case IntegratorChoice::kExpmapBody:
        att = att * exp_so3_matrix(w * dt);
        break;
      case IntegratorChoice::kExpmapWorld: {
        const Eigen::Vector3d w_world = att * w;
        att = exp_so3_matrix(w_world * dt) * att;
        break;
      }
    }
    record(log[i + 1].t, att);
  }
  return traj;
}

bool parallel_available() {
#ifdef _OPENMP
  return omp_get_max_threads() > 1;
#else
  return false;
#endif
}

std::array<CompareRow, 4> compare_integrators(const RotationMatrix& r0,
                                              std::span<const GyroSample> log, Execution exec) {
  std::array<AttitudeTrajectory, 4> trajs;
  std::exception_ptr failure;

  const bool parallel = exec == Execution::kParallel;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (int i = 0; i < 4; ++i) {
    try {
      trajs[static_cast<std::size_t>(i)] = propagate(r0, log, kAllIntegrators[i]);
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
      {
        if (!failure) failure = std::current_exception();
      }
    }
  }
  (void)parallel;
  if (failure) std::rethrow_exception(failure);

  const Eigen::Matrix3d reference = trajs[2].back().attitude;  // kExpmapBody
  std::array<CompareRow, 4> rows;
  for (std::size_t i = 0; i < 4; ++i) {
    double max_defect = 0.0;
    for (const TrajectoryPoint& p : trajs[i].points()) {
      max_defect = std::max(max_defect, p.orth_defect);
    }
    rows[i] = CompareRow{kAllIntegrators[i], (trajs[i].back().attitude - reference).norm(),
                         max_defect};
  }
  return rows;
}

}  // namespace rotkin
