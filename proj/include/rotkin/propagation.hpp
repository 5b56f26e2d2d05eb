#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "rotkin/derivatives.hpp"

namespace rotkin {

// One gyroscope reading: body-frame angular velocity at time t (seconds).
struct GyroSample {
  double t;
  AngularVelocity w;
};

enum class IntegratorChoice { kEulerRaw, kEulerReproject, kExpmapBody, kExpmapWorld };

inline constexpr std::array<IntegratorChoice, 4> kAllIntegrators{
    IntegratorChoice::kEulerRaw, IntegratorChoice::kEulerReproject,
    IntegratorChoice::kExpmapBody, IntegratorChoice::kExpmapWorld};

std::string_view integrator_name(IntegratorChoice c);
std::optional<IntegratorChoice> integrator_from_name(std::string_view name);

// ||M^T M - I||_F, the departure of M from the rotation group.
double orthogonality_error(const Eigen::Matrix3d& m);

// One attitude estimate with its drift diagnostics. The matrix is stored raw
// because raw Euler integration deliberately leaves the group; use
// AttitudeTrajectory::validated_attitude() when a checked rotation is needed.
struct TrajectoryPoint {
  double t;
  Eigen::Matrix3d attitude;  // from_frame -> to_frame estimate
  double orth_defect;        // ||A^T A - I||_F
  double det_defect;         // |det(A) - 1|
};

// Time-ordered attitude estimates for one (from, to) frame pair.
class AttitudeTrajectory {
 public:
  AttitudeTrajectory() : from_(kBody), to_(kWorld) {}
  AttitudeTrajectory(FrameId from, FrameId to) : from_(from), to_(to) {}

  FrameId from_frame() const { return from_; }
  FrameId to_frame() const { return to_; }

  const std::vector<TrajectoryPoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const TrajectoryPoint& front() const { return points_.front(); }
  const TrajectoryPoint& back() const { return points_.back(); }

  // Appends a point; timestamps must stay strictly increasing.
  void append(const TrajectoryPoint& p);

  // The i-th attitude passed through validate_rotation at the given tolerances.
  RotationMatrix validated_attitude(std::size_t i, double orth_tol = kDefaultOrthTol,
                                    double det_tol = kDefaultDetTol) const;

 private:
  FrameId from_;
  FrameId to_;
  std::vector<TrajectoryPoint> points_;
};

// Closed-form exponential of skew(phi) (Rodrigues):
//   I + sin(t)/t * [phi]x + (1 - cos(t))/t^2 * [phi]x^2,  t = ||phi||,
// with a Taylor branch below t = 1e-8. Always lands on the group.
Eigen::Matrix3d exp_so3_matrix(const Eigen::Vector3d& phi);
RotationMatrix exp_so3(const Eigen::Vector3d& phi, FrameId from = kBody, FrameId to = kWorld);

// One explicit-Euler step R + R*[w_body]x*dt, returned raw: the result is not
// orthogonal and is meant for drift studies.
Eigen::Matrix3d step_euler_body(const RotationMatrix& r, const AngularVelocity& w_body,
                                double dt);

// Exact flow of the body-rate form under a rate held constant over dt:
// R * exp_so3(w_body * dt).
RotationMatrix step_expmap_body(const RotationMatrix& r, const AngularVelocity& w_body,
                                double dt);

// Exact flow of the world-rate form: exp_so3(w_world * dt) * R. Like the
// world-rate derivative itself, this assumes the two frame origins coincide.
RotationMatrix step_expmap_world(const RotationMatrix& r, const AngularVelocity& w_world,
                                 double dt);

// Nearest rotation by the averaging iteration M <- (M + M^-T)/2, run until
// ||M^T M - I||_F <= 1e-14 (at most 100 iterations). Throws
// ImproperRotationError if det(M) <= 0 and NumericalError on non-convergence.
RotationMatrix reorthonormalize(const Eigen::Matrix3d& m, FrameId from = kBody,
                                FrameId to = kWorld);

// Dead-reckons attitude from body-rate samples under a zero-order hold: the
// rate at sample i is held over [t_i, t_i+1], and the trajectory ends at the
// last timestamp (the final rate is never extrapolated). The first point is
// the initial attitude at the first sample time; diagnostics are recorded at
// every point. kExpmapWorld converts the held rate to the world frame with
// the current attitude estimate each step.
AttitudeTrajectory propagate(const RotationMatrix& r0, std::span<const GyroSample> log,
                             IntegratorChoice method);

// How a batch of independent integrations is executed.
enum class Execution { kSerial, kParallel };

// True when the parallel path actually runs multi-threaded.
bool parallel_available();

// Drift summary of one integrator against the expmap-body trajectory.
struct CompareRow {
  IntegratorChoice integrator;
  double final_distance;   // Frobenius distance of final attitudes
  double max_orth_defect;  // over all trajectory points
};

// Runs all four integrators on one log. Rows come back in the fixed order of
// kAllIntegrators regardless of execution mode.
std::array<CompareRow, 4> compare_integrators(const RotationMatrix& r0,
                                              std::span<const GyroSample> log,
                                              Execution exec = Execution::kSerial);

}  // namespace rotkin
