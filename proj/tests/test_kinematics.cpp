#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rotkin/derivatives.hpp"
#include "rotkin/planar.hpp"
#include "rotkin/sampling.hpp"

using namespace rotkin;

namespace {

struct Case {
  RotationMatrix r;
  Eigen::Vector3d w_body;
  Eigen::Vector3d w_world;
};

Case make_case(std::size_t i) {
  Rng rng = Rng::for_case(23, 200, i);
  RotationMatrix r = random_rotation(rng);
  const Eigen::Vector3d w_body = rng.uniform_vector(-10.0, 10.0);
  return Case{r, w_body, r.matrix() * w_body};
}

Eigen::Matrix3d e3_generator() {
  Eigen::Matrix3d g;
  g << 0, -1, 0, 1, 0, 0, 0, 0, 0;
  return g;
}

}  // namespace

TEST_CASE("world-rate derivative at the identity is the rate generator") {
  const RotationMatrix id = RotationMatrix::identity(kBody, kWorld);
  const RotationDerivative d = rdot_world_rate(id, {{0.0, 0.0, 1.0}, kWorld});
  CHECK((d.value - e3_generator()).cwiseAbs().maxCoeff() == 0.0);
  CHECK(d.from == kBody);
  CHECK(d.to == kWorld);

  Rng rng = Rng::for_case(23, 201, 0);
  const RotationMatrix r = random_rotation(rng);
  CHECK(rdot_world_rate(r, {Eigen::Vector3d::Zero(), kWorld}).value.isZero(0.0));
}

TEST_CASE("world-rate derivative of a planar embedding matches the closed form") {
  for (double alpha : {0.0, 0.4, -1.7, 2.9}) {
    for (double alpha_dot : {1.0, -0.3, 2.5}) {
      const Eigen::Matrix3d rdot =
          rdot_world_rate(embed_planar(alpha), {{0.0, 0.0, alpha_dot}, kWorld}).value;
      Eigen::Matrix3d expected = Eigen::Matrix3d::Zero();
      expected.topLeftCorner<2, 2>() = rot2_dot(alpha, alpha_dot);
      CHECK((rdot - expected).cwiseAbs().maxCoeff() <= 1e-15);
    }
  }
}

TEST_CASE("body-rate derivative at the identity and zero rate") {
  const RotationMatrix id = RotationMatrix::identity(kBody, kWorld);
  CHECK((rdot_body_rate(id, {{0.0, 0.0, 1.0}, kBody}).value - e3_generator())
            .cwiseAbs()
            .maxCoeff() == 0.0);

  Rng rng = Rng::for_case(23, 202, 0);
  const RotationMatrix r = random_rotation(rng);
  CHECK(rdot_body_rate(r, {Eigen::Vector3d::Zero(), kBody}).value.isZero(0.0));
}

TEST_CASE("body- and world-rate forms agree when the rates correspond") {
  for (std::size_t i = 0; i < 300; ++i) {
    const Case c = make_case(i);
    const Eigen::Matrix3d via_world = rdot_world_rate(c.r, {c.w_world, kWorld}).value;
    const Eigen::Matrix3d via_body = rdot_body_rate(c.r, {c.w_body, kBody}).value;
    CHECK((via_world - via_body).cwiseAbs().maxCoeff() <= 1e-13);
  }
}

TEST_CASE("inverse-rotation derivatives negate the generator at the identity") {
  const RotationMatrix id = RotationMatrix::identity(kWorld, kBody);  // world->body
  Eigen::Matrix3d neg = -e3_generator();
  CHECK((rdot_inverse_world_rate(id, {{0.0, 0.0, 1.0}, kWorld}).value - neg)
            .cwiseAbs()
            .maxCoeff() == 0.0);
  CHECK((rdot_inverse_body_rate(id, {{0.0, 0.0, 1.0}, kBody}).value - neg)
            .cwiseAbs()
            .maxCoeff() == 0.0);
  CHECK(rdot_inverse_world_rate(id, {Eigen::Vector3d::Zero(), kWorld}).value.isZero(0.0));
  CHECK(rdot_inverse_body_rate(id, {Eigen::Vector3d::Zero(), kBody}).value.isZero(0.0));
}

TEST_CASE("inverse derivative equals the transpose of the forward derivative") {
  for (std::size_t i = 0; i < 300; ++i) {
    const Case c = make_case(i);
    const RotationMatrix r_inv = c.r.inverse();
    const Eigen::Matrix3d forward = rdot_world_rate(c.r, {c.w_world, kWorld}).value;
    const Eigen::Matrix3d inv_world = rdot_inverse_world_rate(r_inv, {c.w_world, kWorld}).value;
    const Eigen::Matrix3d inv_body = rdot_inverse_body_rate(r_inv, {c.w_body, kBody}).value;
    CHECK((forward.transpose() - inv_world).cwiseAbs().maxCoeff() <= 1e-13);
    CHECK((inv_world - inv_body).cwiseAbs().maxCoeff() <= 1e-13);
  }
}

TEST_CASE("each derivative form rejects a rate in the wrong frame") {
  const Case c = make_case(0);
  const RotationMatrix r_inv = c.r.inverse();
  CHECK_THROWS_AS(rdot_world_rate(c.r, {c.w_body, kBody}), FrameMismatchError);
  CHECK_THROWS_AS(rdot_body_rate(c.r, {c.w_world, kWorld}), FrameMismatchError);
  CHECK_THROWS_AS(rdot_inverse_world_rate(r_inv, {c.w_body, kBody}), FrameMismatchError);
  CHECK_THROWS_AS(rdot_inverse_body_rate(r_inv, {c.w_world, kWorld}), FrameMismatchError);
}

TEST_CASE("rate recovery round-trips both forms") {
  for (std::size_t i = 0; i < 300; ++i) {
    const Case c = make_case(i);
    const RotationDerivative via_world = rdot_world_rate(c.r, {c.w_world, kWorld});
    const RotationDerivative via_body = rdot_body_rate(c.r, {c.w_body, kBody});

    const AngularVelocity w_a = world_rate_from_rdot(c.r, via_world);
    CHECK(w_a.expressed_in == kWorld);
    CHECK((w_a.rad_per_s - c.w_world).norm() <= 1e-13);

    const AngularVelocity w_b = body_rate_from_rdot(c.r, via_body);
    CHECK(w_b.expressed_in == kBody);
    CHECK((w_b.rad_per_s - c.w_body).norm() <= 1e-13);

    // Body rate recovered from the world-rate form is R^T w_world.
    const AngularVelocity cross = body_rate_from_rdot(c.r, via_world);
    CHECK((cross.rad_per_s - c.r.matrix().transpose() * c.w_world).norm() <= 1e-13);
  }
}

TEST_CASE("rate recovery of a zero derivative is zero") {
  const Case c = make_case(1);
  const RotationDerivative zero{Eigen::Matrix3d::Zero(), c.r.from_frame(), c.r.to_frame()};
  CHECK(world_rate_from_rdot(c.r, zero).rad_per_s == Eigen::Vector3d::Zero());
  CHECK(body_rate_from_rdot(c.r, zero).rad_per_s == Eigen::Vector3d::Zero());
}

TEST_CASE("rate recovery rejects a non-tangent derivative with its defect") {
  const Case c = make_case(2);
  // Rdot = R gives Rdot R^T = I, whose skewness defect is ||2I||_F = 2 sqrt(3).
  const RotationDerivative not_tangent{c.r.matrix(), c.r.from_frame(), c.r.to_frame()};
  try {
    world_rate_from_rdot(c.r, not_tangent);
    FAIL("expected InconsistentDerivativeError");
  } catch (const InconsistentDerivativeError& e) {
    CHECK(e.defect() == doctest::Approx(2.0 * std::sqrt(3.0)).epsilon(1e-9));
  }
  CHECK_THROWS_AS(body_rate_from_rdot(c.r, not_tangent), InconsistentDerivativeError);
}

TEST_CASE("rate recovery rejects mismatched derivative tags") {
  const Case c = make_case(3);
  const RotationDerivative wrong_tags{rdot_world_rate(c.r, {c.w_world, kWorld}).value, kWorld,
                                      kBody};
  CHECK_THROWS_AS(world_rate_from_rdot(c.r, wrong_tags), FrameMismatchError);
}

TEST_CASE("a sign flip in the body-rate form is caught by the consistency check") {
  // Mutation probe: the four-formula property must detect R*[-w]x against
  // the world-rate route with a defect far above its threshold.
  double min_defect = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < 100; ++i) {
    const Case c = make_case(i);
    const Eigen::Matrix3d good = rdot_world_rate(c.r, {c.w_world, kWorld}).value;
    const Eigen::Matrix3d flipped =
        rdot_body_rate(c.r, {Eigen::Vector3d(-c.w_body), kBody}).value;
    min_defect = std::min(min_defect, (good - flipped).cwiseAbs().maxCoeff());
  }
  CHECK(min_defect > 1e-3);
}
