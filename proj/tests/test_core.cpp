#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "rotkin/planar.hpp"
#include "rotkin/rotation.hpp"
#include "rotkin/sampling.hpp"

using namespace rotkin;

namespace {

// Independent componentwise cross product used as the oracle.
Eigen::Vector3d cross_ref(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
  return {a.y() * b.z() - a.z() * b.y(), a.z() * b.x() - a.x() * b.z(),
          a.x() * b.y() - a.y() * b.x()};
}

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("frame ids compare by id") {
  CHECK(kWorld == kWorld);
  CHECK(kWorld != kBody);
  const FrameId sensor{7, "sensor"};
  CHECK(sensor != kWorld);
  CHECK(sensor == FrameId{7, "other-label"});  // identity is the id, not the name
}

TEST_CASE("skew lays entries out as (0,-w3,w2; w3,0,-w1; -w2,w1,0)") {
  const Eigen::Matrix3d s = skew({1.0, 2.0, 3.0}).matrix();
  Eigen::Matrix3d expected;
  expected << 0, -3, 2, 3, 0, -1, -2, 1, 0;
  CHECK((s - expected).cwiseAbs().maxCoeff() == 0.0);

  CHECK(skew({0.0, 0.0, 0.0}).matrix().isZero(0.0));

  const Eigen::Matrix3d sz = skew({0.0, 0.0, 1.0}).matrix();
  Eigen::Matrix3d ez;
  ez << 0, -1, 0, 1, 0, 0, 0, 0, 0;
  CHECK((sz - ez).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("skew rejects non-finite input") {
  CHECK_THROWS_AS(skew({kNan, 0.0, 0.0}), InvalidInputError);
  CHECK_THROWS_AS(skew({0.0, std::numeric_limits<double>::infinity(), 0.0}),
                  InvalidInputError);
}

TEST_CASE("unskew inverts skew exactly") {
  CHECK(unskew(skew({1.0, 2.0, 3.0})) == Eigen::Vector3d(1.0, 2.0, 3.0));
  CHECK(unskew(SkewMatrix({0.0, 0.0, 0.0})) == Eigen::Vector3d::Zero());
  const Eigen::Vector3d w(-4.0, 5.0, 0.5);
  CHECK(unskew(skew(w)) == w);
}

TEST_CASE("skew matrices are exactly antisymmetric for random inputs") {
  for (std::size_t i = 0; i < 100; ++i) {
    Rng rng = Rng::for_case(7, 100, i);
    const Eigen::Vector3d w = rng.uniform_vector(-10.0, 10.0);
    const Eigen::Matrix3d s = skew(w).matrix();
    CHECK((s + s.transpose()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(unskew(skew(w)) == w);
  }
}

TEST_CASE("skew_to_nearest keeps exact skew input and strips small symmetric parts") {
  const Eigen::Matrix3d s = skew({0.5, -1.5, 2.0}).matrix();
  CHECK((skew_to_nearest(s, 1e-12).matrix() - s).cwiseAbs().maxCoeff() == 0.0);

  Eigen::Matrix3d noisy;
  noisy << 1e-14, -1, 0, 1, 1e-14, 0, 0, 0, 1e-14;
  Eigen::Matrix3d clean;
  clean << 0, -1, 0, 1, 0, 0, 0, 0, 0;
  CHECK((skew_to_nearest(noisy, 1e-12).matrix() - clean).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("skew_to_nearest reports the defect of a non-skew matrix") {
  // ||I + I^T||_F = 2*sqrt(3), worked by hand.
  const double expected_defect = 2.0 * std::sqrt(3.0);
  try {
    skew_to_nearest(Eigen::Matrix3d::Identity(), 1e-12);
    FAIL("expected NotSkewError");
  } catch (const NotSkewError& e) {
    CHECK(e.defect() == doctest::Approx(expected_defect).epsilon(1e-12));
  }
  CHECK_THROWS_AS(skew_to_nearest(Eigen::Matrix3d::Identity(), -1.0), InvalidInputError);
}

TEST_CASE("apply_skew equals the cross product") {
  const FramedVector e3{{0.0, 0.0, 1.0}, kBody};
  const FramedVector e1{{1.0, 0.0, 0.0}, kBody};
  CHECK(apply_skew(e3, e1).value == Eigen::Vector3d(0.0, 1.0, 0.0));

  const FramedVector v{{2.0, -1.0, 3.0}, kBody};
  CHECK(apply_skew(v, v).value == Eigen::Vector3d::Zero());

  const FramedVector a{{1.0, 2.0, 3.0}, kWorld};
  const FramedVector b{{4.0, 5.0, 6.0}, kWorld};
  // Oracle: componentwise cross product gives (-3, 6, -3).
  CHECK(cross_ref(a.value, b.value) == Eigen::Vector3d(-3.0, 6.0, -3.0));
  CHECK((apply_skew(a, b).value - Eigen::Vector3d(-3.0, 6.0, -3.0)).norm() <= 1e-12);

  CHECK_THROWS_AS(apply_skew(a, e1), FrameMismatchError);
}

TEST_CASE("validate_rotation accepts the identity and rejects defects") {
  const RotationMatrix id = validate_rotation(Eigen::Matrix3d::Identity(), kBody, kWorld);
  CHECK(id.from_frame() == kBody);
  CHECK(id.to_frame() == kWorld);

  Eigen::Matrix3d reflection = Eigen::Matrix3d::Identity();
  reflection(2, 2) = -1.0;
  CHECK_THROWS_AS(validate_rotation(reflection, kBody, kWorld), ImproperRotationError);

  // ||(2I)(2I)^T - I||_F = ||3I||_F = 3*sqrt(3), worked by hand.
  try {
    validate_rotation(2.0 * Eigen::Matrix3d::Identity(), kBody, kWorld);
    FAIL("expected NotOrthogonalError");
  } catch (const NotOrthogonalError& e) {
    CHECK(e.defect() == doctest::Approx(3.0 * std::sqrt(3.0)).epsilon(1e-12));
  }

  Eigen::Matrix3d nan_matrix = Eigen::Matrix3d::Identity();
  nan_matrix(0, 0) = kNan;
  CHECK_THROWS_AS(validate_rotation(nan_matrix, kBody, kWorld), InvalidInputError);
}

TEST_CASE("equal frame tags only admit the identity") {
  CHECK_NOTHROW(validate_rotation(Eigen::Matrix3d::Identity(), kBody, kBody));
  CHECK_THROWS_AS(validate_rotation(embed_planar(1.0).matrix(), kBody, kBody),
                  InvalidInputError);
}

TEST_CASE("inverse transposes and swaps tags") {
  const RotationMatrix id = RotationMatrix::identity(kBody, kWorld);
  const RotationMatrix inv = id.inverse();
  CHECK(inv.from_frame() == kWorld);
  CHECK(inv.to_frame() == kBody);
  CHECK(inv.matrix() == Eigen::Matrix3d::Identity());

  const double alpha = 0.7;
  CHECK((embed_planar(alpha).inverse().matrix() - embed_planar(-alpha).matrix())
            .cwiseAbs()
            .maxCoeff() <= 1e-15);

  for (std::size_t i = 0; i < 50; ++i) {
    Rng rng = Rng::for_case(11, 101, i);
    const RotationMatrix r = random_rotation(rng);
    CHECK((r.matrix() * r.inverse().matrix() - Eigen::Matrix3d::Identity()).norm() <= 1e-14);
    CHECK(r.inverse().inverse().matrix() == r.matrix());
  }
}

TEST_CASE("transform_point applies R and retags") {
  const FramedVector p{{0.3, -1.2, 4.0}, kBody};
  const RotationMatrix id = RotationMatrix::identity(kBody, kWorld);
  const FramedVector moved = transform_point(id, p);
  CHECK(moved.value == p.value);
  CHECK(moved.frame == kWorld);

  const FramedVector e1{{1.0, 0.0, 0.0}, kBody};
  const FramedVector quarter = transform_point(embed_planar(kPi / 2.0), e1);
  CHECK((quarter.value - Eigen::Vector3d(0.0, 1.0, 0.0)).norm() <= 1e-15);

  const RotationMatrix r = embed_planar(1.234);
  const FramedVector round_trip = transform_point(r.inverse(), transform_point(r, p));
  CHECK((round_trip.value - p.value).norm() <= 1e-14);
  CHECK(round_trip.frame == kBody);

  const FramedVector wrong{{1.0, 0.0, 0.0}, kWorld};
  CHECK_THROWS_AS(transform_point(r, wrong), FrameMismatchError);
}

TEST_CASE("transform_angular_velocity converts frames and preserves norm") {
  const AngularVelocity w{{0.1, 0.2, 0.3}, kBody};
  const AngularVelocity same = transform_angular_velocity(RotationMatrix::identity(kBody, kWorld), w);
  CHECK(same.rad_per_s == w.rad_per_s);
  CHECK(same.expressed_in == kWorld);

  // Planar embeddings leave a z-rate untouched.
  for (double alpha : {0.0, 0.5, -2.0, 3.1}) {
    const AngularVelocity wz{{0.0, 0.0, 1.7}, kBody};
    const AngularVelocity out = transform_angular_velocity(embed_planar(alpha), wz);
    CHECK(out.rad_per_s == wz.rad_per_s);
  }

  for (std::size_t i = 0; i < 100; ++i) {
    Rng rng = Rng::for_case(13, 102, i);
    const RotationMatrix r = random_rotation(rng);
    const AngularVelocity wb{rng.uniform_vector(-10.0, 10.0), kBody};
    const AngularVelocity wa = transform_angular_velocity(r, wb);
    CHECK(std::abs(wa.rad_per_s.norm() - wb.rad_per_s.norm()) <= 1e-13);
  }

  const AngularVelocity wrong{{1.0, 0.0, 0.0}, kWorld};
  CHECK_THROWS_AS(transform_angular_velocity(embed_planar(0.2), wrong), FrameMismatchError);
}

TEST_CASE("conjugate_skew matches skew of the rotated vector") {
  const Eigen::Vector3d w(0.4, -0.8, 1.1);
  const RotationMatrix id = RotationMatrix::identity(kBody, kWorld);
  CHECK(conjugate_skew(id, w).matrix() == skew(w).matrix());

  const RotationMatrix quarter = embed_planar(kPi / 2.0);
  const Eigen::Matrix3d lhs = conjugate_skew(quarter, {1.0, 0.0, 0.0}).matrix();
  CHECK((lhs - skew({0.0, 1.0, 0.0}).matrix()).cwiseAbs().maxCoeff() <= 1e-15);

  for (std::size_t i = 0; i < 200; ++i) {
    Rng rng = Rng::for_case(17, 103, i);
    const RotationMatrix r = random_rotation(rng);
    const Eigen::Vector3d v = rng.uniform_vector(-10.0, 10.0);
    CHECK((conjugate_skew(r, v).matrix() - conjugate_skew_matrix(r, v)).norm() <= 1e-13);
  }
}

TEST_CASE("compose chains transforms with tag checking") {
  const FrameId camera{2, "camera"};
  const RotationMatrix body_to_world = embed_planar(0.3, kBody, kWorld);
  const RotationMatrix camera_to_body = embed_planar(0.5, camera, kBody);
  const RotationMatrix camera_to_world = compose(body_to_world, camera_to_body);
  CHECK(camera_to_world.from_frame() == camera);
  CHECK(camera_to_world.to_frame() == kWorld);
  CHECK((camera_to_world.matrix() - embed_planar(0.8).matrix()).norm() <= 1e-15);

  CHECK_THROWS_AS(compose(camera_to_body, body_to_world), FrameMismatchError);
}
