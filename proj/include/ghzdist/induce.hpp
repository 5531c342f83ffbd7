#pragma once

#include <vector>

#include "ghzdist/stabcode.hpp"

namespace ghzdist {

// Who applies the diagonal Clifford that restores Charlie's Z components:
// nobody, Alice (on C before sending), or Bob (on C after the BC correction).
enum class clifford_placement { none, alice, bob };

// Code induced on Bob and Charlie jointly, qubit order B_1..B_n C_1..C_n.
// Joint generators first (one per standard-form generator of Alice's code),
// then the n rows Z_Bi Z_Ci. The eps entries are the signs of the bare
// E(a_i, b_i) on A after Alice's measurements, in standard-form order.
struct induced_bc_code {
    stab_code code;
    std::vector<pauli> alice_gens;
    std::vector<int> eps_a;
};

// Bell case: Bob's generator i is Alice's with sign times (-1)^{m_i + a_i.b_i},
// built from the code's original generators.
stab_code bell_partner(const stab_code& c, const bitvec& m);

induced_bc_code ghz_bc_code(const stab_code& c, const std::vector<int>& eps_a,
                            clifford_placement placement);

// Charlie's n-qubit code. eps_b must be +1 on purely Z-type rows (those
// never get measured by Bob; their signs ride along from Alice).
stab_code charlie_code(const stab_code& c, const std::vector<int>& eps_a,
                       const std::vector<int>& eps_b, clifford_placement placement);

}  // namespace ghzdist
