#pragma once

#include <cmath>
#include <cstdint>

// Deterministic, platform-independent randomness helpers. Rendering noise is
// addressed by (seed, frame, pixel) so frames can be produced in any order and
// still match bit-for-bit.

namespace netpen {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline uint64_t hash_combine(uint64_t a, uint64_t b) {
    return splitmix64(a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2)));
}

/// Uniform in [0, 1).
inline double u01(uint64_t h) {
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

/// Standard normal from a single hash key (Box-Muller, first component).
inline double gauss01(uint64_t h) {
    double u1 = u01(splitmix64(h));
    double u2 = u01(splitmix64(h ^ 0xda3e39cb94b95bdbULL));
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

/// Small sequential PRNG for test/scene generation; stable across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double uniform() { return u01(next()); }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    int uniform_int(int lo, int hi) { // inclusive bounds
        return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
    }

    double gaussian(double mean, double sigma) {
        double u1 = uniform();
        double u2 = uniform();
        if (u1 < 1e-300) u1 = 1e-300;
        return mean + sigma * std::sqrt(-2.0 * std::log(u1)) *
                          std::cos(2.0 * 3.14159265358979323846 * u2);
    }

private:
    uint64_t state_;
};

} // namespace netpen
