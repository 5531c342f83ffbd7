#pragma once

#include <cstdint>

namespace ghzdist {

// splitmix64 stream. Per-trial streams are keyed by (seed, trial index) so a
// parallel sweep reproduces the sequential result bit for bit.
struct splitmix64 {
    std::uint64_t state = 0;

    explicit splitmix64(std::uint64_t seed) : state(seed) {}

    static splitmix64 for_trial(std::uint64_t seed, std::uint64_t trial) {
        splitmix64 g(trial ^ 0x6a09e667f3bcc909ull);
        g.state ^= seed * 0x9e3779b97f4a7c15ull;
        g.next();
        return g;
    }

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    int next_bit() { return int(next() >> 63); }

    // uniform in [0, 1) with 53 random bits
    double next_double() { return double(next() >> 11) * 0x1.0p-53; }
};

}  // namespace ghzdist
