#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "ghzdist/gf2lin.hpp"
#include "ghzdist/pauli.hpp"
#include "ghzdist/protocol.hpp"
#include "ghzdist/stabcode.hpp"
#include "ghzdist/tableau.hpp"

// Dense complex reference computations, used by tests and the CLI verify
// command only. Production estimation paths never touch this header.
namespace ghzdist::oracle {

using dense_matrix = Eigen::MatrixXcd;
using dense_state = Eigen::VectorXcd;

// Basis convention: bit i of a basis index is the value of qubit i, so the
// bit order matches the pauli component words everywhere.

// full matrix of iota^phase E(a,b); n <= 7
dense_matrix dense_pauli(const pauli& p);

// sparse action of the same operator on a state; n <= 14
dense_state apply_pauli(const pauli& p, const dense_state& v);

// product of (I + sign_i g_i)/2 over the generators; n <= 7
dense_matrix code_projector(const stab_code& c);

// diagonal unitary diag(iota^{v R v^T mod 4}) for symmetric R; n <= 7
dense_matrix diag_clifford_unitary(const bitmat& r);

// stretch a 2^n matrix to the 2^{2n} matrix sum_{x,y} M_{xy} |x,x><y,y|;
// register layout: first copy in qubits 0..n-1, second in n..2n-1; n <= 3
dense_matrix ghz_map(const dense_matrix& m);

// uniform superposition over |x,x,x> on 3n qubits (blocks A, B, C); n <= 4
dense_state ghz_state(int n);

// the unique state fixed by a full tableau; n <= 14
dense_state tableau_state(const tableau& t);

// 1 - |<a|b>| after normalizing both
double state_mismatch(const dense_state& a, const dense_state& b);

// || (M_A ot I)|GHZ_n> - (I_A ot stretched(M^T))|GHZ_n> ||; n <= 3
double check_lemma4(const dense_matrix& m, int n);

// stretched E(a,b) against (E(a,b) ot E(a,0)) times the stretched identity,
// the product-of-projectors form of the stretched identity, and the full
// projector identity for measurement sign eps; n <= 3
double check_theorem6(std::uint64_t a, std::uint64_t b, int eps, int n);

// || W_B M_A |GHZ_n> - Swap_BC W_C M_A |GHZ_n> ||; n <= 2
double check_theorem7(const dense_matrix& m, const dense_matrix& w, int n);

// a CSS code split into its classical ingredients: c2 generates the X
// stabilizers, c1_perp the Z stabilizers, and quotient the pure logical X
// representatives spanning C1/C2
struct css_pair {
    int n = 0;
    bitmat c2;
    bitmat c1_perp;
    bitmat quotient;
};

css_pair css_bitflip3();
css_pair css_steane();
css_pair css_trivial(int n);

// amplitude matrix amp(x,y) of the projected-and-renormalized n-pair state
// (projector applied on both halves); 2n <= 14
dense_matrix css_bell_amplitudes(const css_pair& pair);

// distance between the projected state and the encoded logical-pair state
double check_css_bell(const css_pair& pair);

// replays forced-outcome measurements on the tableau and as dense projector
// chains; returns the worst disagreement across outcomes, step
// probabilities, and the final state overlap
double check_measure_sequence(const tableau& start,
                              const std::vector<std::pair<pauli, int>>& seq);

// replays a recorded trial event list both ways and compares final states
double check_trace_replay(const tableau& start, const std::vector<trace_event>& events);

struct check_result {
    std::string name;
    bool pass = false;
    double deviation = 0.0;
    double tolerance = 0.0;
};

// the full identity suite behind the CLI verify command
std::vector<check_result> run_verify_suite(std::uint64_t seed = 2024);

}  // namespace ghzdist::oracle
