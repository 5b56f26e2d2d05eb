#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rotkin/finite_difference.hpp"
#include "rotkin/planar.hpp"
#include "rotkin/propagation.hpp"
#include "rotkin/sampling.hpp"

using namespace rotkin;

namespace {

constexpr double kPi = std::numbers::pi;

TrajectoryFunction planar_flow(double omega, double t_max = 10.0) {
  return TrajectoryFunction{[omega](double t) { return embed_planar(omega * t); }, -t_max,
                            t_max};
}

TrajectoryFunction constant_trajectory(const RotationMatrix& r) {
  return TrajectoryFunction{[r](double) { return r; }, 0.0, 1.0};
}

}  // namespace

TEST_CASE("central_difference of a constant trajectory is exactly zero") {
  Rng rng = Rng::for_case(53, 500, 0);
  const TrajectoryFunction f = constant_trajectory(random_rotation(rng));
  CHECK(central_difference(f, 0.5, 1e-3).isZero(0.0));
}

TEST_CASE("central_difference matches the planar derivative") {
  const TrajectoryFunction f = planar_flow(1.0);
  const Eigen::Matrix3d d = central_difference(f, 0.0, 1e-5);
  Eigen::Matrix3d expected = Eigen::Matrix3d::Zero();
  expected.topLeftCorner<2, 2>() = rot2_dot(0.0, 1.0);
  CHECK((d - expected).norm() <= 1e-10);
}

TEST_CASE("central_difference error falls by ~4x when h halves") {
  const TrajectoryFunction f = planar_flow(2.0);
  const double t = 0.3;
  auto error_at = [&](double h) {
    Eigen::Matrix3d analytic = Eigen::Matrix3d::Zero();
    analytic.topLeftCorner<2, 2>() = rot2_dot(2.0 * t, 2.0);
    return (central_difference(f, t, h) - analytic).norm();
  };
  const double ratio = error_at(1e-3) / error_at(5e-4);
  CHECK(ratio >= 3.6);
  CHECK(ratio <= 4.4);
}

TEST_CASE("central_difference enforces the domain") {
  const TrajectoryFunction f{[](double t) { return embed_planar(t); }, 0.0, 1.0};
  CHECK_THROWS_AS(central_difference(f, 0.0, 1e-3), DomainError);
  CHECK_THROWS_AS(central_difference(f, 1.0, 1e-3), DomainError);
  CHECK_THROWS_AS(central_difference(f, 0.5, 0.0), InvalidInputError);
  CHECK_NOTHROW(central_difference(f, 0.5, 1e-3));
}

TEST_CASE("world-rate check on the planar flow") {
  const double omega = 2.0;
  const TrajectoryFunction f = planar_flow(omega);
  const RateFunction w_a = [omega](double) {
    return AngularVelocity{{0.0, 0.0, omega}, kWorld};
  };
  const DerivativeCheckReport report = check_against_world_rate(f, w_a, 0.3, 1e-4);
  CHECK(report.analytic_error <= 1e-7);
  CHECK(report.skewness_defect <= 1e-7);
  CHECK(!report.exact_match);
}

TEST_CASE("world-rate check is exact for a constant trajectory at zero rate") {
  Rng rng = Rng::for_case(53, 501, 0);
  const TrajectoryFunction f = constant_trajectory(random_rotation(rng));
  const RateFunction zero = [](double) {
    return AngularVelocity{Eigen::Vector3d::Zero(), kWorld};
  };
  const DerivativeCheckReport report = check_against_world_rate(f, zero, 0.5, 1e-3);
  CHECK(report.analytic_error <= 1e-15);
  CHECK(report.skewness_defect <= 1e-15);
  CHECK(report.exact_match);
  CHECK(report.order_estimate == 0.0);
}

TEST_CASE("world flows show second-order convergence") {
  for (std::size_t i = 0; i < 10; ++i) {
    Rng rng = Rng::for_case(53, 502, i);
    const Eigen::Matrix3d r0 = random_rotation(rng).matrix();
    const Eigen::Vector3d v = rng.unit_vector() * rng.uniform(0.5, 2.0);
    const TrajectoryFunction f{
        [r0, v](double t) {
          return RotationMatrix::trusted(exp_so3_matrix(t * v) * r0, kBody, kWorld);
        },
        0.0, 2.0};
    const RateFunction w_a = [v](double) { return AngularVelocity{v, kWorld}; };
    const DerivativeCheckReport report =
        check_against_world_rate(f, w_a, rng.uniform(0.1, 1.9), 1e-3);
    CHECK(report.order_estimate >= 1.8);
    CHECK(report.order_estimate <= 2.2);
  }
}

TEST_CASE("body-rate check mirrors the world-rate check") {
  for (std::size_t i = 0; i < 10; ++i) {
    Rng rng = Rng::for_case(53, 503, i);
    const Eigen::Matrix3d r0 = random_rotation(rng).matrix();
    const Eigen::Vector3d v = rng.unit_vector() * rng.uniform(0.5, 2.0);
    const TrajectoryFunction f{
        [r0, v](double t) {
          return RotationMatrix::trusted(r0 * exp_so3_matrix(t * v), kBody, kWorld);
        },
        0.0, 2.0};
    const RateFunction w_b = [v](double) { return AngularVelocity{v, kBody}; };
    const double t = rng.uniform(0.1, 1.9);
    const DerivativeCheckReport report = check_against_body_rate(f, w_b, t, 1e-3);
    // err(h) <= C h^2 with C measured; report the measured constant sane.
    CHECK(report.analytic_error / (1e-3 * 1e-3) <= 10.0);
    CHECK(report.order_estimate >= 1.8);
    CHECK(report.order_estimate <= 2.2);
  }

  const RateFunction zero = [](double) {
    return AngularVelocity{Eigen::Vector3d::Zero(), kBody};
  };
  Rng rng = Rng::for_case(53, 504, 0);
  const TrajectoryFunction constant = constant_trajectory(random_rotation(rng));
  CHECK(check_against_body_rate(constant, zero, 0.5, 1e-3).analytic_error <= 1e-15);
}

TEST_CASE("world and body checks agree on the skewness of the same flow") {
  // f(t) = exp(t v) R0 has world rate v and body rate R(t)^T v; conjugation
  // by an orthogonal matrix preserves the Frobenius norm.
  Rng rng = Rng::for_case(53, 505, 0);
  const Eigen::Matrix3d r0 = random_rotation(rng).matrix();
  const Eigen::Vector3d v = rng.unit_vector();
  const TrajectoryFunction f{
      [r0, v](double t) {
        return RotationMatrix::trusted(exp_so3_matrix(t * v) * r0, kBody, kWorld);
      },
      0.0, 2.0};
  const RateFunction w_a = [v](double) { return AngularVelocity{v, kWorld}; };
  const RateFunction w_b = [&f, v](double t) {
    return AngularVelocity{f.attitude(t).matrix().transpose() * v, kBody};
  };
  const double t = 0.8;
  const double h = 1e-4;
  const DerivativeCheckReport world = check_against_world_rate(f, w_a, t, h);
  const DerivativeCheckReport body = check_against_body_rate(f, w_b, t, h);
  CHECK(std::abs(world.skewness_defect - body.skewness_defect) <= 1e-12);
}

TEST_CASE("skewness_defect closed-form values") {
  CHECK(skewness_defect(skew({1.0, -2.0, 0.5}).matrix()) == 0.0);
  // ||I + I^T||_F = 2 sqrt(3).
  CHECK(skewness_defect(Eigen::Matrix3d::Identity()) ==
        doctest::Approx(2.0 * std::sqrt(3.0)).epsilon(1e-12));

  // Numerical rate matrix from the exponential flow at h = 1e-5.
  Rng rng = Rng::for_case(53, 506, 0);
  const Eigen::Vector3d v = rng.unit_vector();
  const TrajectoryFunction f{
      [v](double t) { return RotationMatrix::trusted(exp_so3_matrix(t * v), kBody, kWorld); },
      0.0, 2.0};
  const Eigen::Matrix3d d = central_difference(f, 1.0, 1e-5);
  CHECK(skewness_defect(d * f.attitude(1.0).matrix().transpose()) <= 1e-9);
}
