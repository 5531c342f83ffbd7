#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ghzdist/gf2lin.hpp"
#include "ghzdist/pauli.hpp"

namespace ghzdist {

// Supplies measurement outcome bits for the random cases; never consulted
// when the outcome is deterministic.
using outcome_source = std::function<int()>;

outcome_source forced_outcomes(std::vector<int> bits);

struct measure_result {
    int m = 0;                  // outcome bit; the measured value is (-1)^m
    bool deterministic = false;
    int replaced_row = -1;      // -1 when no row was replaced
};

// An ordered list of independent, mutually commuting signed Paulis. The row
// count may be below the qubit count (a partial tableau); measuring an
// operator that commutes with every row but is outside the row space is an
// error in that case.
struct tableau {
    int n = 0;
    std::vector<int> blocks;  // subsystem sizes, for transcript grouping
    std::vector<pauli> rows;
    bool paranoid = false;  // re-verify invariants after every mutation

    tableau() = default;
    tableau(int n_, std::vector<int> blocks_ = {});

    void append_row(const pauli& p);

    // components of every row as an r x 2n matrix
    bitmat component_matrix() const;

    // If p's components lie in the row space: the sign s with s·p in the
    // generated signed group (so measuring p yields s). Otherwise empty.
    std::optional<int> deterministic_sign(const pauli& p) const;

    measure_result measure(const pauli& p, const outcome_source& outcome,
                           std::optional<int> replace_row = std::nullopt);

    void apply_error(const pauli& e);
    void apply_diag_clifford(const bitmat& r, const std::vector<int>& qubits);
    void multiply_row(int i, int j);  // rows[i] <- rows[i] · rows[j]

    std::vector<int> row_signs() const;
    std::string transcript() const;
    void verify_invariants() const;
};

tableau new_bell(int n);
tableau new_ghz(int n, bool yyx_rewrite = false);

}  // namespace ghzdist
