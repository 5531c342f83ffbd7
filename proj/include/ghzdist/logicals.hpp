#pragma once

#include <vector>

#include "ghzdist/stabcode.hpp"

namespace ghzdist {

// Generates a logical Z / logical X pair per encoded qubit by simulating the
// code's standard-form generator measurements on the A side of n three-party
// GHZ states. Deterministic: simulated outcomes are forced to +1, so the
// logical X signs come purely from Pauli multiplication phases.
logical_paulis generate_logicals(const stab_code& c);
void attach_logicals(stab_code& c);

// Pairing repair: T_ij = <zbar_i, xbar_j>_s must be the identity; when it is
// not, the zbar Z parts are premultiplied by T^-1. Singular T is a hard error.
std::vector<pauli> fix_pairing(const std::vector<pauli>& zbars,
                               const std::vector<pauli>& xbars);

}  // namespace ghzdist
