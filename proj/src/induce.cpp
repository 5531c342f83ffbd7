#include "ghzdist/induce.hpp"

#include <bit>
#include <stdexcept>

namespace ghzdist {

namespace {

void check_signs(const std::vector<int>& eps, int r, const char* what) {
    if (int(eps.size()) != r)
        throw std::invalid_argument(std::string(what) + ": need one sign per generator");
    for (int s : eps)
        if (s != 1 && s != -1)
            throw std::invalid_argument(std::string(what) + ": signs must be +1 or -1");
}

pauli signed_pauli(int n, std::uint64_t x, std::uint64_t z, int parity) {
    return pauli(n, x, z, (parity & 1) ? 2 : 0);
}

}  // namespace

stab_code bell_partner(const stab_code& c, const bitvec& m) {
    if (m.n != c.r()) throw std::invalid_argument("bell_partner: need one outcome per generator");
    std::vector<pauli> gens;
    for (int i = 0; i < c.r(); ++i) {
        pauli g = c.gens[size_t(i)];
        int flip = m.get(i) ^ (std::popcount(g.x & g.z) & 1);
        g.phase = std::uint8_t((g.phase + 2 * flip) & 3);
        gens.push_back(g);
    }
    return from_generators(gens);
}

induced_bc_code ghz_bc_code(const stab_code& c, const std::vector<int>& eps_a,
                            clifford_placement placement) {
    check_signs(eps_a, c.r(), "ghz_bc_code");
    const int n = c.n;
    std::vector<pauli> gens;
    for (int i = 0; i < c.r(); ++i) {
        const pauli& g = c.sf.gens[size_t(i)];
        int parity = (eps_a[size_t(i)] < 0) ? 1 : 0;
        if (i < c.sf.r_x) {
            parity ^= std::popcount(g.x & g.z) & 1;
            std::uint64_t zc = (placement == clifford_placement::alice) ? g.z : 0;
            gens.push_back(signed_pauli(2 * n, g.x | (g.x << n), g.z | (zc << n), parity));
        } else {
            gens.push_back(signed_pauli(2 * n, 0, g.z, parity));
        }
    }
    for (int i = 0; i < n; ++i)
        gens.push_back(pauli(2 * n, 0, (1ull << i) | (1ull << (n + i)), 0));
    return {from_generators(gens), c.sf.gens, eps_a};
}

stab_code charlie_code(const stab_code& c, const std::vector<int>& eps_a,
                       const std::vector<int>& eps_b, clifford_placement placement) {
    check_signs(eps_a, c.r(), "charlie_code");
    check_signs(eps_b, c.r(), "charlie_code");
    std::vector<pauli> gens;
    for (int i = 0; i < c.r(); ++i) {
        const pauli& g = c.sf.gens[size_t(i)];
        if (i >= c.sf.r_x) {
            if (eps_b[size_t(i)] != 1)
                throw std::invalid_argument(
                    "charlie_code: purely Z-type rows must carry a +1 Bob sign");
            gens.push_back(signed_pauli(c.n, 0, g.z, eps_a[size_t(i)] < 0));
            continue;
        }
        int parity = (eps_a[size_t(i)] < 0) ^ (eps_b[size_t(i)] < 0);
        parity ^= std::popcount(g.x & g.z) & 1;
        std::uint64_t zc = (placement == clifford_placement::none) ? 0 : g.z;
        gens.push_back(signed_pauli(c.n, g.x, zc, parity));
    }
    return from_generators(gens);
}

}  // namespace ghzdist
