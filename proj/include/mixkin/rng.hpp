#pragma once

#include <cmath>
#include <cstdint>

#include "mixkin/geometry.hpp"

namespace mixkin {

// Counter-based generator built on SplitMix64. Every (seed, stream) pair
// yields an independent reproducible sequence, so parallel loops can hand a
// private substream to each work item and results do not depend on
// scheduling. Gaussians are produced by Box-Muller to keep the byte stream
// platform-library independent.

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Mix a seed with stream labels into a fresh 64-bit key.
inline std::uint64_t derive_key(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  std::uint64_t s = seed;
  std::uint64_t k = splitmix64(s);
  s = k ^ (a * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
  k = splitmix64(s);
  s = k ^ (b * 0xda942042e4dd58b5ULL + 0x9e3779b97f4a7c15ULL);
  return splitmix64(s);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) { (void)splitmix64(state_); }
  Rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index = 0)
      : state_(derive_key(seed, stream, index)) {}

  std::uint64_t next_u64() { return splitmix64(state_); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Standard normal (Box-Muller, pairwise).
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  Vec3 normal3() { return {normal(), normal(), normal()}; }

  /// Uniform in the centered cube [-half, half]^3.
  Vec3 cube(double half) {
    return {uniform(-half, half), uniform(-half, half), uniform(-half, half)};
  }

  /// Uniform in the ball of given radius (rejection from the cube).
  Vec3 ball(double radius) {
    for (;;) {
      const Vec3 p = cube(radius);
      if (norm2(p) <= radius * radius) return p;
    }
  }

  /// Uniform direction on the unit sphere.
  Vec3 unit_vector() {
    const double c = uniform(-1.0, 1.0);
    const double phi = 2.0 * M_PI * uniform01();
    const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
    return {s * std::cos(phi), s * std::sin(phi), c};
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace mixkin
