#include "qzb/random.hpp"

namespace qzb {

// Both draws sample the unit ball by rejection and then project, which gives
// an isotropic direction. Acceptance probability is pi^2/32 in 4-D and pi/6 in 3-D.

Quaternion Sampler::unit_quaternion() {
  for (;;) {
    const Quaternion q = quaternion();
    const double n2 = norm_squared(q);
    if (n2 > 1e-6 && n2 <= 1.0) return q / std::sqrt(n2);
  }
}

Quaternion Sampler::unit_imaginary() {
  for (;;) {
    const double x = uniform(-1.0, 1.0);
    const double y = uniform(-1.0, 1.0);
    const double z = uniform(-1.0, 1.0);
    const double n2 = x * x + y * y + z * z;
    if (n2 > 1e-6 && n2 <= 1.0) {
      const double n = std::sqrt(n2);
      return {0.0, x / n, y / n, z / n};
    }
  }
}

}  // namespace qzb
