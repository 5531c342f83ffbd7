#include "doctest.h"
#include "ghzdist/logicals.hpp"
#include "test_util.hpp"

using namespace ghzdist;

namespace {

void check_logical_invariants(const stab_code& c, const logical_paulis& lp) {
    REQUIRE(int(lp.zbar.size()) == c.k);
    REQUIRE(int(lp.xbar.size()) == c.k);
    for (const auto& z : lp.zbar) {
        CHECK(z.x == 0);
        CHECK(z.sign() == 1);
    }
    for (int i = 0; i < c.k; ++i)
        for (int j = 0; j < c.k; ++j)
            CHECK(commutes(lp.zbar[size_t(i)], lp.xbar[size_t(j)]) == (i == j ? 1 : 0));
    for (int i = 0; i < c.k; ++i)
        for (int j = i + 1; j < c.k; ++j) {
            CHECK(commutes(lp.xbar[size_t(i)], lp.xbar[size_t(j)]) == 0);
            CHECK(commutes(lp.zbar[size_t(i)], lp.zbar[size_t(j)]) == 0);
        }
    for (const auto& g : c.gens) {
        for (const auto& z : lp.zbar) CHECK(commutes(z, g) == 0);
        for (const auto& x : lp.xbar) CHECK(commutes(x, g) == 0);
    }
    bitmat m(0, 2 * c.n);
    for (const auto& g : c.gens) m.append_row(g.symplectic());
    for (const auto& z : lp.zbar) m.append_row(z.symplectic());
    for (const auto& x : lp.xbar) m.append_row(x.symplectic());
    CHECK(rank(m) == c.r() + 2 * c.k);
}

}  // namespace

TEST_SUITE("logicals") {

TEST_CASE("five qubit code") {
    auto c = five_qubit();
    auto lp = generate_logicals(c);
    REQUIRE(lp.zbar.size() == 1);
    REQUIRE(lp.xbar.size() == 1);
    CHECK(format_pauli(lp.zbar[0]) == "+ZZZZZ");
    CHECK(format_pauli(lp.xbar[0]) == "-YIZZI");
    check_logical_invariants(c, lp);
}

TEST_CASE("bit flip code") {
    auto c = bitflip3();
    auto lp = generate_logicals(c);
    CHECK(format_pauli(lp.zbar[0]) == "+ZII");
    CHECK(format_pauli(lp.xbar[0]) == "+XXX");
    check_logical_invariants(c, lp);
}

TEST_CASE("yy code") {
    auto c = yy3();
    auto lp = generate_logicals(c);
    CHECK(format_pauli(lp.zbar[0]) == "+ZZZ");
    check_logical_invariants(c, lp);
}

TEST_CASE("css codes get purely X-type logical X") {
    for (auto make : {bitflip3, steane}) {
        auto c = make();
        auto lp = generate_logicals(c);
        for (const auto& x : lp.xbar) CHECK(x.z == 0);
        check_logical_invariants(c, lp);
    }
    auto c = from_generators({parse_pauli("+XXXX"), parse_pauli("+ZZZZ")});
    REQUIRE(c.k == 2);
    auto lp = generate_logicals(c);
    for (const auto& x : lp.xbar) CHECK(x.z == 0);
    check_logical_invariants(c, lp);
}

TEST_CASE("pairing repair") {
    SUBCASE("identity pairing unchanged") {
        std::vector<pauli> z = {parse_pauli("+ZI")}, x = {parse_pauli("+XI")};
        CHECK(fix_pairing(z, x) == z);
    }
    SUBCASE("swapped pairing gets unswapped") {
        std::vector<pauli> z = {parse_pauli("+ZI"), parse_pauli("+IZ")};
        std::vector<pauli> x = {parse_pauli("+IX"), parse_pauli("+XI")};
        auto fixed = fix_pairing(z, x);
        CHECK(format_pauli(fixed[0]) == "+IZ");
        CHECK(format_pauli(fixed[1]) == "+ZI");
    }
    SUBCASE("singular pairing is a hard error") {
        std::vector<pauli> z = {parse_pauli("+ZI"), parse_pauli("+ZI")};
        std::vector<pauli> x = {parse_pauli("+XI"), parse_pauli("+XI")};
        CHECK_THROWS_AS(fix_pairing(z, x), std::logic_error);
        CHECK_THROWS_AS(fix_pairing({parse_pauli("+ZI")}, {}), std::invalid_argument);
    }
}

TEST_CASE("deterministic output") {
    for (auto make : {five_qubit, bitflip3, yy3, steane}) {
        auto c = make();
        auto a = generate_logicals(c), b = generate_logicals(c);
        CHECK(a.zbar == b.zbar);
        CHECK(a.xbar == b.xbar);
    }
}

TEST_CASE("attach fills the code") {
    auto c = five_qubit();
    CHECK_FALSE(c.logicals.has_value());
    attach_logicals(c);
    REQUIRE(c.logicals.has_value());
    CHECK(format_pauli(c.logicals->zbar[0]) == "+ZZZZZ");
}

TEST_CASE("random codes satisfy every logical invariant") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + int(rng() % 6);
        int r = 1 + int(rng() % n);
        auto c = testutil::random_code(rng, n, r);
        logical_paulis lp;
        REQUIRE_NOTHROW(lp = generate_logicals(c));
        check_logical_invariants(c, lp);
    }
}

TEST_CASE("full-rank code has no logicals") {
    auto c = from_generators({parse_pauli("+XX"), parse_pauli("+ZZ")});
    REQUIRE(c.k == 0);
    auto lp = generate_logicals(c);
    CHECK(lp.zbar.empty());
    CHECK(lp.xbar.empty());
}

}  // TEST_SUITE
