#include "ghzdist/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace ghzdist {

namespace {

std::uint64_t mask_of(int n) {
    return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void check_same(const pauli& p, const pauli& q) {
    if (p.n != q.n) throw std::invalid_argument("qubit count mismatch");
}

}  // namespace

pauli::pauli(int n_, std::uint64_t x_, std::uint64_t z_, int phase_) : n(n_) {
    if (n_ < 0 || n_ > 64) throw std::invalid_argument("qubit count must be in [0, 64]");
    x = x_ & mask_of(n_);
    z = z_ & mask_of(n_);
    phase = std::uint8_t(((phase_ % 4) + 4) % 4);
}

pauli pauli::identity(int n) { return pauli(n, 0, 0, 0); }

int pauli::sign() const {
    if (phase & 1) throw std::invalid_argument("operator has an imaginary phase");
    return phase == 0 ? 1 : -1;
}

bitvec pauli::symplectic() const { return concat(bitvec(n, x), bitvec(n, z)); }

pauli multiply(const pauli& p, const pauli& q) {
    check_same(p, q);
    // Work with the bare-XZ phase lambda, where the operator equals
    // i^lambda X^x Z^z and lambda = phase + x·z mod 4. Commuting Z^z past
    // X^x costs (-1)^{z_p·x_q}.
    int lp = (p.phase + std::popcount(p.x & p.z)) & 3;
    int lq = (q.phase + std::popcount(q.x & q.z)) & 3;
    int lr = (lp + lq + 2 * std::popcount(p.z & q.x)) & 3;
    pauli r(p.n, p.x ^ q.x, p.z ^ q.z, 0);
    r.phase = std::uint8_t(((lr - std::popcount(r.x & r.z)) % 4 + 4) & 3);
    return r;
}

int commutes(const pauli& p, const pauli& q) {
    check_same(p, q);
    return (std::popcount(p.x & q.z) ^ std::popcount(p.z & q.x)) & 1;
}

pauli transpose(const pauli& p) {
    pauli r = p;
    r.phase = std::uint8_t((p.phase + 2 * std::popcount(p.x & p.z)) & 3);
    return r;
}

int weight(const pauli& p) { return std::popcount(p.x | p.z); }

pauli parse_pauli(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty Pauli string");
    size_t pos = 0;
    int phase = 0;
    if (s[0] == '+' || s[0] == '-') {
        phase = s[0] == '-' ? 2 : 0;
        pos = 1;
    }
    if (pos == s.size()) throw std::invalid_argument("Pauli string has no letters");
    int n = int(s.size() - pos);
    pauli p(n, 0, 0, phase);
    for (int i = 0; i < n; ++i) {
        switch (s[pos + i]) {
            case 'I': break;
            case 'X': p.x |= std::uint64_t{1} << i; break;
            case 'Y':
                p.x |= std::uint64_t{1} << i;
                p.z |= std::uint64_t{1} << i;
                break;
            case 'Z': p.z |= std::uint64_t{1} << i; break;
            default:
                throw std::invalid_argument("invalid Pauli character '" +
                                            std::string(1, s[pos + i]) + "' at position " +
                                            std::to_string(pos + i));
        }
    }
    return p;
}

std::string format_pauli(const pauli& p) {
    std::string s(1, p.sign() > 0 ? '+' : '-');
    for (int i = 0; i < p.n; ++i) {
        int xb = int((p.x >> i) & 1), zb = int((p.z >> i) & 1);
        s += xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
    }
    return s;
}

pauli embed(const pauli& p, int n_total, int offset) {
    if (offset < 0 || offset + p.n > n_total)
        throw std::invalid_argument("embed target out of range");
    return pauli(n_total, p.x << offset, p.z << offset, p.phase);
}

}  // namespace ghzdist
