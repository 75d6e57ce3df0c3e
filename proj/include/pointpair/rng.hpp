#pragma once
// Counter-based deterministic RNG for the sampling campaigns.
//
// Campaign kernels address sample i directly via stream_for(seed, i), so the
// same (seed, index) always yields the same draw regardless of thread count
// or platform. std::random distributions are implementation-defined, which
// would break the byte-identical report contract; everything here is pinned.

#include <cstdint>
#include <cmath>

namespace pointpair {

struct SplitMix64 {
    uint64_t state;

    uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1), 53-bit resolution
    double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * u01(); }

    // log-uniform over [10^lo, 10^hi]
    double log_uniform(double lo, double hi) { return std::pow(10.0, uniform(lo, hi)); }

    // standard normal via Box-Muller
    double gaussian() {
        double u = u01(), v = u01();
        if (u < 0x1.0p-60) u = 0x1.0p-60;
        return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586476925286766559 * v);
    }
};

inline uint64_t mix64(uint64_t x) {
    x ^= x >> 33;
    x *= 0xFF51AFD7ED558CCDULL;
    x ^= x >> 33;
    x *= 0xC4CEB9FE1A85EC53ULL;
    x ^= x >> 33;
    return x;
}

// Independent stream for sample index i of a seeded campaign.
inline SplitMix64 stream_for(uint64_t seed, uint64_t index) {
    return SplitMix64{mix64(seed ^ 0x9E3779B97F4A7C15ULL) + index * 0xBF58476D1CE4E5B9ULL};
}

}  // namespace pointpair
