#pragma once

#include <stdexcept>

#include "ghzdist/pauli.hpp"
#include "ghzdist/rng.hpp"

namespace ghzdist {

// Memoryless per-qubit Pauli channel: identity with 1 - px - py - pz,
// otherwise X, Y or Z with the listed probabilities.
struct channel_model {
    double px = 0, py = 0, pz = 0;

    static channel_model depolarizing(double p) {
        if (p < 0 || p > 1) throw std::invalid_argument("depolarizing rate out of range");
        return {p / 3, p / 3, p / 3};
    }

    static channel_model custom(double px, double py, double pz) {
        if (px < 0 || py < 0 || pz < 0 || px + py + pz > 1)
            throw std::invalid_argument("channel probabilities out of range");
        return {px, py, pz};
    }

    double total() const { return px + py + pz; }
};

// One uniform draw per qubit, in qubit order.
inline pauli sample_error(const channel_model& ch, int n, splitmix64& rng) {
    std::uint64_t x = 0, z = 0;
    for (int q = 0; q < n; ++q) {
        double u = rng.next_double();
        std::uint64_t bit = std::uint64_t{1} << q;
        if (u < ch.px) {
            x |= bit;
        } else if (u < ch.px + ch.py) {
            x |= bit;
            z |= bit;
        } else if (u < ch.px + ch.py + ch.pz) {
            z |= bit;
        }
    }
    return pauli(n, x, z);
}

}  // namespace ghzdist
