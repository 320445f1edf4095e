#pragma once

#include <cstdint>
#include <random>

namespace wquad {

/// Deterministic uniform doubles for seeded sampling.
///
/// std::mt19937_64 output is pinned by the standard, but
/// std::uniform_real_distribution is implementation-defined, so the engine
/// output is mapped to [0, 1) with the fixed 53-bit ladder (u >> 11) * 2^-53.
/// Equal seeds give bit-equal streams on every conforming standard library.
class UniformRng {
  public:
    explicit UniformRng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform in [0, 1).
    double next() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double in(double lo, double hi) { return lo + (hi - lo) * next(); }

  private:
    std::mt19937_64 eng_;
};

}  // namespace wquad
