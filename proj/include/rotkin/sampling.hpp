#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Core>

#include "rotkin/rotation.hpp"

namespace rotkin {

// Deterministic random source for property sweeps. A generator derived from
// (seed, stream, index) always produces the same draws for the same build,
// independent of how cases are scheduled across threads; value-to-double
// mappings are spelled out here instead of using std distributions so the
// sequences do not depend on the standard library implementation.
class Rng {
 public:
  static Rng for_case(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

  // Uniform in [lo, hi).
  double uniform(double lo, double hi);
  // Standard normal (Box-Muller).
  double gaussian();

  Eigen::Vector3d uniform_vector(double lo, double hi);
  Eigen::Vector3d gaussian_vector();
  // Normalized Gaussian 3-vector.
  Eigen::Vector3d unit_vector();

 private:
  explicit Rng(std::uint64_t state) : engine_(state) {}
  double canonical();  // [0, 1)

  std::mt19937_64 engine_;
};

// Random rotation from a uniform random axis (normalized Gaussian vector)
// and a uniform angle in [0, pi], through the exponential map.
RotationMatrix random_rotation(Rng& rng, FrameId from = kBody, FrameId to = kWorld);

}  // namespace rotkin
