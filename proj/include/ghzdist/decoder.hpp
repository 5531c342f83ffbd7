#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ghzdist/stabcode.hpp"

namespace ghzdist {

// Exhaustive minimum-weight coset-leader table, indexed by the syndrome bits
// read as a little-endian integer. Ties at equal weight go to the smaller
// (x, z) component pair, x compared first, both as little-endian integers.
struct syndrome_table {
    stab_code code;
    std::vector<std::optional<pauli>> leaders;
    bool complete = false;
    int weight_reached = 0;
};

// Breadth-first over error weight until every syndrome has a leader. Without
// max_weight, exceeding the enumeration budget throws; with it, enumeration
// stops at that weight (or at the budget) and the table is marked incomplete
// if syndromes remain unfilled.
syndrome_table build_table(const stab_code& c, std::optional<int> max_weight = std::nullopt,
                           std::uint64_t budget = std::uint64_t{1} << 26);

pauli decode(const syndrome_table& t, const bitvec& s);

// Minimal weight over operators commuting with every generator but lying
// outside the group. Needs k >= 1.
int min_distance(const stab_code& c, std::uint64_t budget = std::uint64_t{1} << 26);

std::string dump_table(const syndrome_table& t);

}  // namespace ghzdist
