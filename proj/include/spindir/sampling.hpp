#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "spindir/direction.hpp"

namespace spindir {

// Deterministic 64-bit-seed generator. Uniform doubles are produced from the
// top 53 bits of the raw stream so the mapping does not depend on the
// standard library's distribution internals.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  private:
    std::mt19937_64 engine_;
};

// Isotropic direction: cos(theta) uniform in [-1, 1], phi uniform in [0, 2pi).
inline Direction haar_sample(Rng& rng) {
    const double c = 2.0 * rng.uniform() - 1.0;
    const double phi = 2.0 * M_PI * rng.uniform();
    return Direction(std::acos(c), phi);
}

}  // namespace spindir
