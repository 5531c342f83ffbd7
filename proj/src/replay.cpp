#include "ghzdist/replay.hpp"

#include <stdexcept>
#include <string>

#include "ghzdist/gf2lin.hpp"
#include "ghzdist/pauli.hpp"

namespace ghzdist {

namespace {

outcome_source forced_plus() {
    return [] { return 0; };
}

void snapshot(replay_result& r, const std::string& label) {
    r.transcript += label;
    r.transcript += '\n';
    r.transcript += r.state.transcript();
}

measure_result forced_measure(replay_result& r, const pauli& p,
                              std::optional<int> replace_row = std::nullopt) {
    measure_result m = r.state.measure(p, forced_plus(), replace_row);
    if (m.m != 0) throw std::logic_error("replay measurement produced outcome -1");
    return m;
}

}  // namespace

replay_result replay_table1() {
    replay_result r;
    r.state = new_bell(5);
    r.state.paranoid = true;
    snapshot(r, "initial: five entangled pairs");

    struct move {
        const char* op;
        int replace;
    };
    // replacement rows are the walkthrough's free choices, not the default
    // first-anticommuting rows
    const move moves[] = {
        {"+XZZXI", 8},
        {"+IXZZX", 9},
        {"+XIXZZ", 4},
        {"+ZXIXZ", 0},
    };
    for (const move& mv : moves) {
        pauli p = embed(parse_pauli(mv.op), 10, 0);
        forced_measure(r, p, mv.replace);
        snapshot(r, std::string("measure ") + mv.op +
                        " on block A, outcome +1, replacing row " +
                        std::to_string(mv.replace));
    }
    return r;
}

replay_result replay_table2() {
    replay_result r;
    r.state = new_ghz(3, true);
    r.state.paranoid = true;
    snapshot(r, "initial: three shared triples");

    // block-A check 1, then fold the first two -YYX rows into a joint BC row
    measure_result m1 = forced_measure(r, embed(parse_pauli("+YYI"), 9, 0));
    if (m1.replaced_row != 0) throw std::logic_error("unexpected replacement row");
    r.state.multiply_row(6, 7);
    r.state.multiply_row(6, 0);
    snapshot(r, "measure +YYI on block A, outcome +1, then fold rows 6 and 7 into a joint BC row");

    // block-A check 2, same fold one row down
    measure_result m2 = forced_measure(r, embed(parse_pauli("+IYY"), 9, 0));
    if (m2.replaced_row != 1) throw std::logic_error("unexpected replacement row");
    r.state.multiply_row(7, 8);
    r.state.multiply_row(7, 1);
    snapshot(r, "measure +IYY on block A, outcome +1, then fold rows 7 and 8 into a joint BC row");

    // inverse phase gate on every C qubit: three applications of the
    // identity-form diagonal Clifford cube the phase gate into its inverse
    const bitmat eye = bitmat::identity(3);
    for (int rep = 0; rep < 3; ++rep) r.state.apply_diag_clifford(eye, {6, 7, 8});
    snapshot(r, "conjugate every C qubit by the inverse phase gate");

    // the five joint BC checks are now fixed by the state; confirm them
    const pauli bc_checks[] = {r.state.rows[3], r.state.rows[4], r.state.rows[5],
                               r.state.rows[6], r.state.rows[7]};
    for (const pauli& p : bc_checks) {
        measure_result m = r.state.measure(p, forced_plus());
        if (!m.deterministic || m.m != 0)
            throw std::logic_error("joint BC check was not a deterministic +1");
    }
    snapshot(r, "measure the five joint BC checks, all deterministic, outcome +1");

    // block-B checks, then cancel the B support of the joint rows
    measure_result m3 = forced_measure(r, embed(parse_pauli("+YYI"), 9, 3));
    if (m3.replaced_row != 3) throw std::logic_error("unexpected replacement row");
    measure_result m4 = forced_measure(r, embed(parse_pauli("+IYY"), 9, 3));
    if (m4.replaced_row != 4) throw std::logic_error("unexpected replacement row");
    r.state.multiply_row(6, 3);
    r.state.multiply_row(7, 4);
    snapshot(r, "measure +YYI and +IYY on block B, outcomes +1, then cancel the B support of rows 6 and 7");

    return r;
}

}  // namespace ghzdist
