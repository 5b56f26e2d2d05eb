#include "rotkin/sampling.hpp"

#include <cmath>
#include <numbers>

#include "rotkin/propagation.hpp"

namespace rotkin {

namespace {

// splitmix64 finalizer; decorrelates nearby (seed, stream, index) triples.
std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Rng Rng::for_case(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return Rng(mix(mix(mix(seed) ^ stream) ^ index));
}

double Rng::canonical() {
  // 53 uniform mantissa bits in [0, 1).
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * canonical(); }

double Rng::gaussian() {
  const double u1 = 1.0 - canonical();  // (0, 1]
  const double u2 = canonical();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Eigen::Vector3d Rng::uniform_vector(double lo, double hi) {
  const double x = uniform(lo, hi);
  const double y = uniform(lo, hi);
  const double z = uniform(lo, hi);
  return {x, y, z};
}

Eigen::Vector3d Rng::gaussian_vector() {
  const double x = gaussian();
  const double y = gaussian();
  const double z = gaussian();
  return {x, y, z};
}

Eigen::Vector3d Rng::unit_vector() {
  for (;;) {
    const Eigen::Vector3d v = gaussian_vector();
    const double n = v.norm();
    if (n > 1e-12) return v / n;
  }
}

RotationMatrix random_rotation(Rng& rng, FrameId from, FrameId to) {
  const Eigen::Vector3d axis = rng.unit_vector();
  const double angle = rng.uniform(0.0, std::numbers::pi);
  return exp_so3(axis * angle, from, to);
}

}  // namespace rotkin
