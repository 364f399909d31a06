#pragma once

#include <cstdint>

namespace mpns {

/// Counter-based random numbers: every draw is a pure function of
/// (seed, counter words), so generated fields do not depend on evaluation
/// order.  splitmix64 finalizer over a mixed key.
struct CounterRng {
    uint64_t seed = 0;

    static uint64_t mix(uint64_t z) {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    uint64_t bits(uint64_t c0, uint64_t c1 = 0, uint64_t c2 = 0, uint64_t c3 = 0) const {
        uint64_t h = mix(seed ^ 0x2545f4914f6cdd1dull);
        h = mix(h ^ c0);
        h = mix(h ^ c1);
        h = mix(h ^ c2);
        h = mix(h ^ c3);
        return h;
    }

    /// Uniform in (0, 1]; never returns 0 so it is safe inside log().
    double uniform(uint64_t c0, uint64_t c1 = 0, uint64_t c2 = 0, uint64_t c3 = 0) const {
        return (static_cast<double>(bits(c0, c1, c2, c3) >> 11) + 1.0) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller on two decorrelated uniforms.
    double normal(uint64_t c0, uint64_t c1 = 0, uint64_t c2 = 0, uint64_t c3 = 0) const;
};

/// Stable 64-bit combiner for deriving member seeds from a run seed.
uint64_t derive_seed(uint64_t seed, uint64_t stream);

}  // namespace mpns
