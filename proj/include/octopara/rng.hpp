#pragma once

#include <cmath>
#include <cstdint>

namespace octopara {

// Counter-based generator: every draw is a pure function of
// (seed, stream, counter), so trial t of suite s reproduces identically no
// matter how trials are distributed over worker threads. SplitMix64 mixing.
class Rng {
public:
    Rng(uint64_t seed, uint64_t stream = 0)
        : state_(mix(mix(seed + 0x9e3779b97f4a7c15ull) ^ mix(stream + 0xbf58476d1ce4e5b9ull))) {}

    static Rng for_trial(uint64_t seed, uint64_t stream, uint64_t trial) {
        Rng r(seed, stream);
        r.state_ ^= mix(trial + 0x94d049bb133111ebull);
        return r;
    }

    uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix(state_);
    }

    // Uniform in [0, 1).
    double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Box-Muller; avoids std::normal_distribution so streams are
    // implementation-independent.
    double normal() {
        const double u1 = std::max(uniform(), 0x1.0p-60);
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    uint64_t below(uint64_t n) { return next_u64() % n; }

private:
    static uint64_t mix(uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ull;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebull;
        z ^= z >> 31;
        return z;
    }

    uint64_t state_;
};

}  // namespace octopara
