#include <random>

#include "doctest.h"
#include "ghzdist/diagclifford.hpp"
#include "ghzdist/induce.hpp"
#include "ghzdist/logicals.hpp"
#include "ghzdist/tableau.hpp"
#include "test_util.hpp"

using namespace ghzdist;

namespace {

std::vector<std::string> formatted(const std::vector<pauli>& v) {
    std::vector<std::string> out;
    for (const auto& p : v) out.push_back(format_pauli(p));
    return out;
}

std::vector<int> all_plus(int r) { return std::vector<int>(size_t(r), 1); }

}  // namespace

TEST_SUITE("induce") {

TEST_CASE("bell partner") {
    auto c = five_qubit();
    auto bob = bell_partner(c, bitvec(4));
    CHECK(formatted(bob.gens) == formatted(c.gens));  // every a_i.b_i = 0 here

    auto flipped = bell_partner(c, bitvec(4, 0b0001));
    CHECK(format_pauli(flipped.gens[0]) == "-XZZXI");
    CHECK(format_pauli(flipped.gens[1]) == "+IXZZX");

    auto ycode = from_generators({parse_pauli("+Y")});
    CHECK(format_pauli(bell_partner(ycode, bitvec(1)).gens[0]) == "-Y");
    CHECK(format_pauli(bell_partner(ycode, bitvec(1, 1)).gens[0]) == "+Y");

    auto s = steane();
    CHECK(formatted(bell_partner(s, bitvec(6)).gens) == formatted(s.gens));

    CHECK_THROWS_AS(bell_partner(c, bitvec(3)), std::invalid_argument);
}

TEST_CASE("single-qubit bc codes") {
    auto zcode = from_generators({parse_pauli("+Z")});
    auto bc = ghz_bc_code(zcode, {1}, clifford_placement::none);
    CHECK(formatted(bc.code.gens) == std::vector<std::string>{"+ZI", "+ZZ"});

    auto ycode = from_generators({parse_pauli("+Y")});
    bc = ghz_bc_code(ycode, {1}, clifford_placement::none);
    CHECK(formatted(bc.code.gens) == std::vector<std::string>{"-YX", "+ZZ"});

    auto xcode = from_generators({parse_pauli("+X")});
    bc = ghz_bc_code(xcode, {1}, clifford_placement::none);
    CHECK(formatted(bc.code.gens) == std::vector<std::string>{"+XX", "+ZZ"});
}

TEST_CASE("yy code bc rows") {
    auto c = yy3();
    auto alice = ghz_bc_code(c, all_plus(2), clifford_placement::alice);
    CHECK(format_pauli(alice.code.gens[0]) == "+YYIYYI");
    CHECK(format_pauli(alice.code.gens[1]) == "+IYYIYY");
    CHECK(format_pauli(alice.code.gens[2]) == "+ZIIZII");

    auto none = ghz_bc_code(c, all_plus(2), clifford_placement::none);
    CHECK(format_pauli(none.code.gens[0]) == "+YYIXXI");

    // Bob's Clifford acts after the BC correction, so the BC code is the same
    auto bob = ghz_bc_code(c, all_plus(2), clifford_placement::bob);
    CHECK(formatted(bob.code.gens) == formatted(none.code.gens));

    CHECK(none.code.n == 6);
    CHECK(none.code.k == 1);
    CHECK(none.alice_gens == c.sf.gens);

    auto flipped = ghz_bc_code(c, {-1, 1}, clifford_placement::none);
    CHECK(format_pauli(flipped.code.gens[0]) == "-YYIXXI");
    CHECK_THROWS_AS(ghz_bc_code(c, {1}, clifford_placement::none), std::invalid_argument);
    CHECK_THROWS_AS(ghz_bc_code(c, {1, 2}, clifford_placement::none), std::invalid_argument);
}

TEST_CASE("charlie code") {
    auto c = yy3();
    auto ch = charlie_code(c, {-1, 1}, {1, 1}, clifford_placement::bob);
    CHECK(formatted(ch.gens) == std::vector<std::string>{"-YYI", "+IYY"});

    ch = charlie_code(c, {-1, 1}, {1, 1}, clifford_placement::none);
    CHECK(formatted(ch.gens) == std::vector<std::string>{"-XXI", "+IXX"});

    auto bf = bitflip3();
    ch = charlie_code(bf, {-1, 1}, {1, 1}, clifford_placement::bob);
    CHECK(formatted(ch.gens) == std::vector<std::string>{"-ZZI", "+IZZ"});
    CHECK_THROWS_AS(charlie_code(bf, {1, 1}, {-1, 1}, clifford_placement::bob),
                    std::invalid_argument);

    // all signs +1, CSS: Charlie gets exactly Alice's code
    for (auto make : {bitflip3, steane}) {
        auto code = make();
        auto rebuilt =
            charlie_code(code, all_plus(code.r()), all_plus(code.r()), clifford_placement::bob);
        CHECK(formatted(rebuilt.gens) == formatted(code.gens));
    }
}

TEST_CASE("induced codes are valid for every builtin and placement") {
    for (auto make : {five_qubit, bitflip3, yy3, steane}) {
        auto c = make();
        for (auto pl :
             {clifford_placement::none, clifford_placement::alice, clifford_placement::bob}) {
            auto bc = ghz_bc_code(c, all_plus(c.r()), pl);
            CHECK(bc.code.n == 2 * c.n);
            CHECK(bc.code.k == c.k);
            CHECK(bc.code.r() == 2 * c.n - c.k);
            auto ch = charlie_code(c, all_plus(c.r()), all_plus(c.r()), pl);
            CHECK(ch.n == c.n);
            CHECK(ch.r() == c.r());
        }
    }
}

TEST_CASE("bc generators really stabilize the post-measurement state") {
    std::mt19937 rng(5);
    for (auto make : {five_qubit, bitflip3, yy3}) {
        for (auto pl : {clifford_placement::none, clifford_placement::alice}) {
            for (int rep = 0; rep < 3; ++rep) {
                auto c = make();
                attach_logicals(c);
                const int n = c.n;
                tableau t = new_ghz(n);
                outcome_source coin = [&rng] { return int(rng() & 1); };
                std::vector<int> eps;
                for (const auto& g : c.sf.gens) {
                    auto res = t.measure(embed(g, 3 * n, 0), coin);
                    eps.push_back((res.m ? -1 : 1) * g.sign());
                }
                if (pl == clifford_placement::alice) {
                    auto r = solve_clifford(required_targets(c));
                    REQUIRE(r.has_value());
                    std::vector<int> cq;
                    for (int i = 0; i < n; ++i) cq.push_back(2 * n + i);
                    t.apply_diag_clifford(*r, cq);
                }
                auto bc = ghz_bc_code(c, eps, pl);
                for (const auto& g : bc.code.gens) {
                    auto s = t.deterministic_sign(embed(g, 3 * n, n));
                    REQUIRE(s.has_value());
                    CHECK(*s == 1);
                }
            }
        }
    }
}

TEST_CASE("alice placement cannot tell bob and charlie qubits apart") {
    auto c = five_qubit();
    auto bc = ghz_bc_code(c, all_plus(4), clifford_placement::alice);
    bool witness = false;
    for (int i = 0; i < 5; ++i) {
        pauli xbxc(10, (1ull << i) | (1ull << (5 + i)), 0, 0);
        if (!syndrome(bc.code, xbxc).is_zero()) continue;
        if (group_sign(bc.code.gens, xbxc).has_value()) continue;
        witness = true;
        // each half alone is detected
        CHECK_FALSE(syndrome(bc.code, pauli(10, 1ull << i, 0, 0)).is_zero());
        CHECK_FALSE(syndrome(bc.code, pauli(10, 1ull << (5 + i), 0, 0)).is_zero());
    }
    CHECK(witness);
}

}  // TEST_SUITE
