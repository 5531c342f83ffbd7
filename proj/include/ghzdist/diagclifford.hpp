#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ghzdist/gf2lin.hpp"
#include "ghzdist/stabcode.hpp"

namespace ghzdist {

// Targets for the diagonal-Clifford solve: row i asks for a conjugation
// taking E(a_i, 0) to E(a_i, b_i). Rows are the code's mixed standard-form
// generators followed by its logical X operators.
struct clifford_problem {
    bitmat a, b;
};

clifford_problem required_targets(const stab_code& c);

// A·B^T symmetric over GF(2); holds for targets drawn from a valid code.
bool feasible(const clifford_problem& p);

// Symmetric R with A·R = B, free variables zero; empty when infeasible.
// Diagonal entries of R are phase-gate qubits, off-diagonal entries CZ pairs.
std::optional<bitmat> solve_clifford(const clifford_problem& p);

// Residual signs per target row; the conjugation sends E(a, b) to that sign
// times E(a, b ^ aR). The sign is (-1)^{a·(b & aR)} with an extra flip for
// every entry of the integer product a·R that wraps past 1 where a acts.
std::vector<int> sign_fixups(const clifford_problem& p, const bitmat& r);

std::string gate_reading(const bitmat& r);

}  // namespace ghzdist
