#pragma once

#include <cstdint>
#include <random>

namespace swarmalator {

/// Deterministic uniform generator. Doubles are derived from raw 64-bit
/// draws rather than std::uniform_real_distribution, whose output is
/// implementation-defined; a given seed therefore reproduces the same
/// sequence on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace swarmalator
