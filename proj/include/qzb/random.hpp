#pragma once

#include <cstdint>
#include <random>

#include "qzb/quaternion.hpp"

namespace qzb {

/// Seeded sampler used everywhere randomness is needed.
///
/// Bits come from std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Doubles are formed from the top 53 bits (u = (bits >> 11) * 2^-53),
/// never through std::uniform_real_distribution, whose algorithm is
/// implementation-defined. Same seed, same stream, on every conforming platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform on {lo, ..., hi}.
  int integer(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
  }

  /// Components independent and uniform on [-1, 1).
  Quaternion quaternion() {
    const double w = uniform(-1.0, 1.0);
    const double x = uniform(-1.0, 1.0);
    const double y = uniform(-1.0, 1.0);
    const double z = uniform(-1.0, 1.0);
    return {w, x, y, z};
  }

  /// Normalized quaternion() draw.
  Quaternion unit_quaternion();

  /// Uniformly oriented unit imaginary quaternion (an element of the sphere S).
  Quaternion unit_imaginary();

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; derives independent per-item seeds from a run seed.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace qzb
