#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ghzdist/channel.hpp"
#include "ghzdist/decoder.hpp"
#include "ghzdist/induce.hpp"
#include "ghzdist/rng.hpp"
#include "ghzdist/stabcode.hpp"

namespace ghzdist {

enum class protocol_kind { bell, ghz };
enum class topology_kind { chain, split };

struct protocol_config {
    stab_code code;
    protocol_kind protocol = protocol_kind::ghz;
    clifford_placement placement = clifford_placement::none;
    topology_kind topology = topology_kind::chain;
    channel_model channel;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
};

// One trial-side operation, recorded with enough detail to replay the run on
// an independent simulator.
struct trace_event {
    enum class kind { measure, error, clifford } op = kind::measure;
    pauli p;        // measured operator or applied error, full register width
    int m = 0;      // outcome bit of a measurement
    bool deterministic = false;
    bitmat r;       // diagonal Clifford matrix
    std::vector<int> qubits;  // its targets
};

struct trial_options {
    // coin bits for random measurement outcomes, consumed in draw order
    std::optional<std::vector<int>> forced_bits;
    // replaces the BC channel draw (chain: 2n qubits; split and Bell: n)
    std::optional<pauli> inject_bc;
    // replaces the C channel draw (n qubits)
    std::optional<pauli> inject_c;
    std::vector<trace_event>* trace = nullptr;
};

struct trial_result {
    bool success = false;
    bool decode_miss = false;
    // residual components landed outside the stage's stabilizer group,
    // meaning the decoder picked the wrong coset
    bool bc_logical = false;
    bool c_logical = false;
    pauli bc_correction, c_correction;
    pauli bc_residual, c_residual;
};

struct distillation_report {
    std::uint64_t trials = 0, failures = 0;
    std::uint64_t stage_bc = 0, stage_c = 0;  // trials with a stage miscorrection

    double p_f() const { return trials ? double(failures) / double(trials) : 0.0; }
    double standard_error() const;
    double fidelity() const { return 1.0 - p_f(); }
};

// Solves the diagonal Clifford and builds the decoder tables once up front;
// run_trial and estimate only read shared state, so trials can run from any
// number of threads.
struct distill_engine {
    protocol_config cfg;
    bitmat rmat;                // empty when no Clifford is placed
    std::vector<int> c_qubits;  // Clifford targets on the full register
    syndrome_table bc_table;    // chain: joint BC code; split and Bell: the code itself
    std::optional<syndrome_table> charlie_table;

    explicit distill_engine(protocol_config cfg_);

    trial_result run_trial(splitmix64& rng, const trial_options& opt = {}) const;
    distillation_report estimate() const;
};

// Plain memory-channel error correction with the same code and decoder:
// sample an error, decode its syndrome, fail unless correction * error lies
// in the signed stabilizer group.
distillation_report qec_baseline(const stab_code& c, const channel_model& ch,
                                 std::uint64_t trials, std::uint64_t seed);

// exact nonnegative rational, kept reduced with den > 0
struct ratio {
    long long num = 0;
    long long den = 1;
    double value() const { return double(num) / double(den); }
    bool operator==(const ratio&) const = default;
};

ratio make_ratio(long long num, long long den);

// GHZ-diagonal output model: weight 1 - p_f on index 0, the remainder spread
// evenly over the other 8^k - 1 indices. The expanded list is produced for
// k <= 4; larger k carry just the two exact weights.
struct ghz_diag_state {
    ratio fidelity, tail;
    std::uint64_t terms = 0;     // 8^k - 1
    std::vector<ratio> weights;  // all 8^k entries when k <= 4
};

ghz_diag_state output_state(const ratio& p_f, int k);

}  // namespace ghzdist
