#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ghzdist/gf2lin.hpp"
#include "ghzdist/pauli.hpp"

namespace ghzdist {

struct logical_paulis {
    std::vector<pauli> zbar;  // purely Z-type, sign +1
    std::vector<pauli> xbar;
};

// Generators reordered into rows with full-rank X parts followed by purely
// Z-type rows. Row operations are exact Pauli multiplications, so the signed
// group is unchanged.
struct standard_form {
    std::vector<pauli> gens;  // r_x mixed rows then r_z pure-Z rows
    int r_x = 0, r_z = 0;
    bitmat h1;  // X parts of the mixed rows (full rank)
    bitmat h2;  // Z parts of the mixed rows
    bitmat hz;  // Z parts of the pure-Z rows (full rank)
};

struct stab_code {
    int n = 0, k = 0;
    std::vector<pauli> gens;
    standard_form sf;
    std::optional<logical_paulis> logicals;

    int r() const { return n - k; }
};

stab_code from_generators(std::vector<pauli> gens);
stab_code from_file(const std::string& path);

stab_code five_qubit();
stab_code bitflip3();
stab_code yy3();
stab_code steane();

// bit i = 1 iff e anticommutes with gens[i] (input generator order)
bitvec syndrome(const stab_code& c, const pauli& e);

bool is_css(const stab_code& c);

// components-in-row-space test plus the exact sign relating e to the group
// element with the same components; empty when outside the row space
std::optional<int> group_sign(const std::vector<pauli>& gens, const pauli& e);

std::string to_json(const stab_code& c);

}  // namespace ghzdist
