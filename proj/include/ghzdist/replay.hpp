#pragma once

#include <string>

#include "ghzdist/tableau.hpp"

namespace ghzdist {

// Scripted walkthroughs of the two worked distillation traces, with every
// coin-flip outcome forced to +1 and fixed replacement-row choices. The
// names table1/table2 match the CLI replay arguments.
struct replay_result {
    tableau state;           // final tableau
    std::string transcript;  // step labels followed by tableau snapshots
};

// Five entangled pairs; four code checks measured on block A with chosen
// replacement rows. The final group pairs the code's logical operators
// across the two blocks.
replay_result replay_table1();

// Three shared triples of the yy3 code; block-A measurements, a diagonal
// Clifford on block C, joint BC checks, then block-B measurements. The
// final tableau carries three +1 logical rows linking all three blocks.
replay_result replay_table2();

}  // namespace ghzdist
