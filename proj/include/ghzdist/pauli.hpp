#pragma once

#include <cstdint>
#include <string>

#include "ghzdist/gf2lin.hpp"

namespace ghzdist {

// A signed n-qubit Pauli stored as i^phase · E(x, z), where E(a, b) is the
// Hermitian convention with a per-qubit i^{a_i b_i} normalization (so the
// single-qubit (1,1) component is Y, not XZ). phase is an exponent mod 4;
// Hermitian operators have phase 0 (+1) or 2 (-1).
struct pauli {
    int n = 0;
    std::uint64_t x = 0, z = 0;
    std::uint8_t phase = 0;

    pauli() = default;
    pauli(int n_, std::uint64_t x_, std::uint64_t z_, int phase_ = 0);

    static pauli identity(int n);

    bool is_hermitian() const { return (phase & 1) == 0; }
    int sign() const;  // +1 or -1; throws for imaginary phases
    bool is_identity() const { return x == 0 && z == 0 && phase == 0; }
    bool operator==(const pauli&) const = default;

    // components as a length-2n vector [x, z]
    bitvec symplectic() const;
};

pauli multiply(const pauli& p, const pauli& q);

// Symplectic product of the components: 0 when the operators commute,
// 1 when they anticommute.
int commutes(const pauli& p, const pauli& q);

pauli transpose(const pauli& p);
int weight(const pauli& p);

// Text form: optional '+' or mandatory '-' sign, then letters from {I,X,Y,Z},
// leftmost letter = qubit 0. format throws for imaginary phases.
pauli parse_pauli(const std::string& s);
std::string format_pauli(const pauli& p);

// Place p on a larger register with its first qubit at offset.
pauli embed(const pauli& p, int n_total, int offset);

}  // namespace ghzdist
