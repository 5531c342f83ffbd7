#include <complex>
#include <random>

#include "doctest.h"
#include "ghzdist/denseoracle.hpp"
#include "test_util.hpp"

using namespace ghzdist;
using namespace ghzdist::oracle;
using ghzdist::testutil::random_pauli;

namespace {
const std::complex<double> im(0, 1);
}

TEST_SUITE("denseoracle") {
    TEST_CASE("dense pauli matrices") {
        const dense_matrix y = dense_pauli(parse_pauli("+Y"));
        CHECK(std::abs(y(0, 0)) < 1e-15);
        CHECK(std::abs(y(0, 1) - (-im)) < 1e-15);
        CHECK(std::abs(y(1, 0) - im) < 1e-15);
        CHECK(std::abs(y(1, 1)) < 1e-15);

        const dense_matrix xz = dense_pauli(parse_pauli("+XZ"));
        CHECK(xz.rows() == 4);
        // qubit 0 carries the X, qubit 1 the Z
        CHECK(std::abs(xz(1, 0) - 1.0) < 1e-15);
        CHECK(std::abs(xz(3, 2) - (-1.0)) < 1e-15);

        CHECK_THROWS_AS(dense_pauli(pauli(8, 0, 0, 0)), std::invalid_argument);
    }

    TEST_CASE("dense product agrees with the bit-level product") {
        std::mt19937 rng(11);
        for (int trial = 0; trial < 50; ++trial) {
            const pauli p = random_pauli(rng, 3), q = random_pauli(rng, 3);
            const double dev =
                (dense_pauli(multiply(p, q)) - dense_pauli(p) * dense_pauli(q)).norm();
            CHECK(dev < 1e-12);
        }
    }

    TEST_CASE("a corrupted product phase is caught") {
        const pauli p = parse_pauli("+XZY"), q = parse_pauli("+YIZ");
        pauli bad = multiply(p, q);
        bad.phase = (bad.phase + 2) & 3;
        const double dev = (dense_pauli(bad) - dense_pauli(p) * dense_pauli(q)).norm();
        CHECK(dev > 1e-3);
    }

    TEST_CASE("code projectors") {
        const dense_matrix zp = code_projector(from_generators({parse_pauli("+Z")}));
        CHECK(std::abs(zp(0, 0) - 1.0) < 1e-15);
        CHECK(std::abs(zp(1, 1)) < 1e-15);

        const dense_matrix proj = code_projector(five_qubit());
        CHECK((proj * proj - proj).norm() < 1e-10);
        CHECK(std::abs(proj.trace() - std::complex<double>(2, 0)) < 1e-10);
    }

    TEST_CASE("stretch map basics") {
        const dense_matrix stretched = ghz_map(dense_matrix::Identity(2, 2));
        CHECK(stretched.rows() == 4);
        CHECK(std::abs(stretched(0, 0) - 1.0) < 1e-15);
        CHECK(std::abs(stretched(3, 3) - 1.0) < 1e-15);
        CHECK(std::abs(stretched(1, 1)) < 1e-15);
        CHECK_THROWS_AS(ghz_map(dense_matrix::Identity(16, 16)), std::invalid_argument);
    }

    TEST_CASE("identity checks on random inputs") {
        std::mt19937_64 rng(5);
        std::normal_distribution<double> dist;
        auto rnd = [&](int n) {
            const std::int64_t dim = std::int64_t{1} << n;
            dense_matrix m(dim, dim);
            for (std::int64_t i = 0; i < dim; ++i)
                for (std::int64_t j = 0; j < dim; ++j)
                    m(i, j) = std::complex<double>(dist(rng), dist(rng));
            return m;
        };
        CHECK(check_lemma4(dense_matrix::Identity(4, 4), 2) < 1e-12);
        CHECK(check_lemma4(rnd(2), 2) < 1e-10);
        for (std::uint64_t a = 0; a < 2; ++a)
            for (std::uint64_t b = 0; b < 2; ++b) CHECK(check_theorem6(a, b, 1, 1) < 1e-10);
        CHECK(check_theorem6(0b10, 0b11, -1, 2) < 1e-10);
        CHECK(check_theorem7(rnd(1), rnd(1), 1) < 1e-10);
        CHECK(check_theorem7(rnd(2), dense_matrix::Identity(4, 4), 2) < 1e-12);
    }

    TEST_CASE("projected pairs match encoded logical pairs") {
        CHECK(check_css_bell(css_trivial(3)) < 1e-10);
        CHECK(check_css_bell(css_bitflip3()) < 1e-10);
        CHECK(check_css_bell(css_steane()) < 1e-9);

        // the repetition-code state: equal weight on all-zeros and all-ones
        const dense_matrix amps = css_bell_amplitudes(css_bitflip3());
        CHECK(std::abs(amps(0, 0) - 1.0 / std::sqrt(2.0)) < 1e-12);
        CHECK(std::abs(amps(7, 7) - 1.0 / std::sqrt(2.0)) < 1e-12);
        CHECK(std::abs(amps(0, 7)) < 1e-12);
        CHECK(std::abs(amps(3, 3)) < 1e-12);

        css_pair bad = css_bitflip3();
        bad.quotient.set_row(0, bitvec(3, 0b001));  // not orthogonal to the Z space
        CHECK_THROWS_AS(check_css_bell(bad), std::invalid_argument);
    }

    TEST_CASE("measurement chains agree with dense projectors") {
        CHECK(check_measure_sequence(new_bell(1), {{parse_pauli("+ZI"), 1}}) < 1e-12);
        std::mt19937 rng(21);
        for (int trial = 0; trial < 10; ++trial) {
            tableau t(3);
            for (int i = 0; i < 3; ++i) t.append_row(pauli(3, 0, std::uint64_t{1} << i, 0));
            std::vector<std::pair<pauli, int>> seq;
            for (int step = 0; step < 5; ++step) {
                pauli p = random_pauli(rng, 3);
                p.phase &= 2;
                seq.emplace_back(p, int(rng() & 1));
            }
            CHECK(check_measure_sequence(t, seq) < 1e-10);
        }
    }

    TEST_CASE("protocol trace replays densely") {
        protocol_config cfg;
        cfg.code = yy3();
        cfg.protocol = protocol_kind::ghz;
        cfg.placement = clifford_placement::alice;
        cfg.topology = topology_kind::chain;
        cfg.channel = channel_model::depolarizing(0.0);
        cfg.trials = 1;
        cfg.seed = 3;
        const distill_engine engine(cfg);

        std::vector<trace_event> events;
        trial_options opts;
        opts.forced_bits = std::vector<int>{0, 1, 1, 0, 0, 1, 1, 0};
        opts.inject_bc = pauli(6, 0b000010, 0, 0);
        opts.inject_c = pauli(3, 0, 0b001, 0);
        opts.trace = &events;
        splitmix64 rng = splitmix64::for_trial(cfg.seed, 0);
        engine.run_trial(rng, opts);
        REQUIRE(!events.empty());
        CHECK(check_trace_replay(new_ghz(3), events) < 1e-9);
    }

    TEST_CASE("verify suite is green and reproducible") {
        const auto results = run_verify_suite(2024);
        REQUIRE(results.size() == 12);
        for (const auto& r : results) {
            INFO(r.name, " deviation ", r.deviation);
            CHECK(r.pass);
            CHECK(r.deviation < r.tolerance);
        }
        const auto again = run_verify_suite(2024);
        for (std::size_t i = 0; i < results.size(); ++i) {
            CHECK(results[i].name == again[i].name);
            CHECK(results[i].deviation == again[i].deviation);
        }
    }
}
