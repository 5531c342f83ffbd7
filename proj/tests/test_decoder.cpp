#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "ghzdist/decoder.hpp"
#include "ghzdist/induce.hpp"
#include "ghzdist/stabcode.hpp"
#include "test_util.hpp"

using namespace ghzdist;

TEST_SUITE("decoder") {

TEST_CASE("five qubit table is a bijection onto weight <= 1 errors") {
    auto c = five_qubit();
    auto t = build_table(c);
    CHECK(t.complete);
    CHECK(t.weight_reached == 1);
    REQUIRE(t.leaders.size() == 16);
    CHECK(*t.leaders[0] == pauli::identity(5));
    for (std::uint64_t s = 1; s < 16; ++s) {
        REQUIRE(t.leaders[s].has_value());
        CHECK(weight(*t.leaders[s]) == 1);
        CHECK(syndrome(c, *t.leaders[s]).bits == s);
    }
}

TEST_CASE("bit flip table picks the plain X leaders") {
    auto t = build_table(bitflip3());
    CHECK(t.complete);
    REQUIRE(t.leaders.size() == 4);
    CHECK(format_pauli(*t.leaders[0]) == "+III");
    CHECK(format_pauli(*t.leaders[1]) == "+XII");  // beats +YII on the z key
    CHECK(format_pauli(*t.leaders[2]) == "+IIX");
    CHECK(format_pauli(*t.leaders[3]) == "+IXI");
    std::vector<int> weights;
    for (const auto& l : t.leaders) weights.push_back(weight(*l));
    std::sort(weights.begin(), weights.end());
    CHECK(weights == std::vector<int>{0, 1, 1, 1});
}

TEST_CASE("decode returns stored leaders and checks lengths") {
    auto c = five_qubit();
    auto t = build_table(c);
    CHECK(decode(t, bitvec(4, 0)) == pauli::identity(5));
    pauli x1(5, 1, 0);
    CHECK(decode(t, syndrome(c, x1)) == x1);
    CHECK_THROWS_AS(decode(t, bitvec(3, 0)), std::invalid_argument);
}

TEST_CASE("weight one errors on the five qubit code are corrected exactly") {
    auto c = five_qubit();
    auto t = build_table(c);
    for (int q = 0; q < 5; ++q)
        for (int letter = 1; letter < 4; ++letter) {
            std::uint64_t bit = 1ull << q;
            pauli e(5, (letter & 1) ? bit : 0, (letter & 2) ? bit : 0);
            CHECK(decode(t, syndrome(c, e)) == e);
        }
}

TEST_CASE("corrections always cancel the syndrome") {
    std::mt19937 rng(77);
    for (int rep = 0; rep < 30; ++rep) {
        int n = 2 + int(rng() % 5);
        int r = 1 + int(rng() % n);
        auto c = testutil::random_code(rng, n, r);
        auto t = build_table(c);
        CHECK(t.complete);
        for (int trial = 0; trial < 20; ++trial) {
            auto e = testutil::random_pauli(rng, n);
            auto corr = decode(t, syndrome(c, e));
            CHECK(syndrome(c, multiply(corr, e)).is_zero());
            CHECK(weight(corr) <= weight(e));
        }
    }
}

TEST_CASE("induced bc code miscorrects a first qubit charlie error onto bob") {
    auto c = five_qubit();
    std::vector<int> eps(4, 1);
    auto bc = ghz_bc_code(c, eps, clifford_placement::alice);
    auto t = build_table(bc.code);
    CHECK(t.complete);
    pauli x_c1(10, 1ull << 5, 0);
    pauli x_b1(10, 1, 0);
    CHECK(syndrome(bc.code, x_c1) == syndrome(bc.code, x_b1));
    CHECK(decode(t, syndrome(bc.code, x_c1)) == x_b1);
    // the residual X_B1 X_C1 is invisible to the code but not in its group
    auto residual = multiply(x_b1, x_c1);
    CHECK(syndrome(bc.code, residual).is_zero());
    CHECK(!group_sign(bc.code.gens, residual).has_value());
}

TEST_CASE("weight caps leave tables honestly incomplete") {
    auto c = five_qubit();
    auto t0 = build_table(c, 0);
    CHECK(!t0.complete);
    CHECK(t0.weight_reached == 0);
    CHECK(t0.leaders[0].has_value());
    pauli x1(5, 1, 0);
    CHECK_THROWS_AS(decode(t0, syndrome(c, x1)), std::runtime_error);

    auto t1 = build_table(c, 1);
    CHECK(t1.complete);
    CHECK(t1.weight_reached == 1);
}

TEST_CASE("enumeration budget") {
    CHECK_THROWS_AS(build_table(five_qubit(), std::nullopt, 10), std::runtime_error);
    auto t = build_table(five_qubit(), 5, 10);  // capped runs stop instead
    CHECK(!t.complete);
    CHECK(t.weight_reached == 0);
    CHECK_THROWS_AS(min_distance(five_qubit(), 10), std::runtime_error);
}

TEST_CASE("minimum distances of the builtin codes") {
    CHECK(min_distance(five_qubit()) == 3);
    CHECK(min_distance(bitflip3()) == 1);
    CHECK(min_distance(yy3()) == 1);
    CHECK(min_distance(steane()) == 3);
    auto full = from_generators({parse_pauli("XX"), parse_pauli("ZZ")});
    CHECK_THROWS_AS(min_distance(full), std::invalid_argument);
}

TEST_CASE("table dump lists every syndrome") {
    auto t = build_table(five_qubit());
    auto text = dump_table(t);
    CHECK(text.substr(0, text.find('\n')) == "0000\t+IIIII");
    CHECK(std::count(text.begin(), text.end(), '\n') == 16);
    CHECK(text.find('?') == std::string::npos);

    auto partial = dump_table(build_table(t.code, 0));
    CHECK(partial.find("?") != std::string::npos);
}

}  // TEST_SUITE
