#include "mpns/rng.hpp"

#include <cmath>
#include <numbers>

namespace mpns {

double CounterRng::normal(uint64_t c0, uint64_t c1, uint64_t c2, uint64_t c3) const {
    const double u1 = uniform(c0, c1, c2, c3);
    const double u2 = uniform(c0 ^ 0x6a09e667f3bcc909ull, c1, c2, c3);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

uint64_t derive_seed(uint64_t seed, uint64_t stream) {
    return CounterRng::mix(CounterRng::mix(seed ^ 0x9e3779b97f4a7c15ull) ^ stream);
}

}  // namespace mpns
