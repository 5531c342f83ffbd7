#include "ghzdist/protocol.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <utility>

#include "ghzdist/diagclifford.hpp"
#include "ghzdist/logicals.hpp"
#include "ghzdist/tableau.hpp"

namespace ghzdist {

namespace {

// Trial and reference tableaux advanced in lockstep: identical operations,
// shared coin bits, errors on the trial side only. The unsigned row spaces
// stay equal throughout, so a measurement is random in one run exactly when
// it is random in the other.
struct lockstep {
    tableau ref, tri;
    splitmix64* rng = nullptr;
    const std::vector<int>* forced = nullptr;
    std::size_t forced_used = 0;
    std::vector<trace_event>* trace = nullptr;

    int draw_bit() {
        if (forced) {
            if (forced_used >= forced->size())
                throw std::invalid_argument("forced outcome bits exhausted");
            return (*forced)[forced_used++] & 1;
        }
        return rng->next_bit();
    }

    std::pair<measure_result, measure_result> measure(const pauli& p) {
        int drawn = -1;
        outcome_source ref_src = [&] { return drawn = draw_bit(); };
        auto a = ref.measure(p, ref_src);
        outcome_source tri_src = [&]() -> int {
            if (drawn < 0)
                throw std::logic_error("trial run drew a coin the reference run did not");
            return drawn;
        };
        auto b = tri.measure(p, tri_src);
        if (a.deterministic != b.deterministic)
            throw std::logic_error("measurement randomness diverged between runs");
        if (trace)
            trace->push_back({trace_event::kind::measure, p, b.m, b.deterministic, {}, {}});
        return {a, b};
    }

    void error_on_trial(const pauli& e) {
        tri.apply_error(e);
        if (trace) trace->push_back({trace_event::kind::error, e, 0, false, {}, {}});
    }

    void clifford_both(const bitmat& r, const std::vector<int>& qubits) {
        ref.apply_diag_clifford(r, qubits);
        tri.apply_diag_clifford(r, qubits);
        if (trace)
            trace->push_back({trace_event::kind::clifford, pauli(), 0, false, r, qubits});
    }
};

bitvec diff_syndrome(lockstep& l, const std::vector<pauli>& gens, int width, int offset,
                     bool expect_deterministic) {
    bitvec s(int(gens.size()));
    for (std::size_t i = 0; i < gens.size(); ++i) {
        auto [a, b] = l.measure(embed(gens[i], width, offset));
        if (expect_deterministic && !a.deterministic)
            throw std::logic_error("syndrome generator came out random on the reference run");
        s.set(int(i), a.m ^ b.m);
    }
    return s;
}

bool components_in_group(const std::vector<pauli>& gens, const pauli& e) {
    bitmat m(0, 2 * e.n);
    for (const auto& g : gens) m.append_row(g.symplectic());
    return solve_left(m, e.symplectic()).has_value();
}

struct stage_outcome {
    pauli correction, residual;
    bool miss = false, logical = false;
};

stage_outcome correct_stage(lockstep& l, const syndrome_table& table, const bitvec& s,
                            const pauli& err, int width, int offset) {
    stage_outcome out;
    out.correction = pauli::identity(err.n);
    if (!table.leaders[s.bits]) {
        out.miss = true;
        out.residual = err;
        out.logical = true;
        return out;
    }
    out.correction = *table.leaders[s.bits];
    if (out.correction.x || out.correction.z)
        l.error_on_trial(embed(out.correction, width, offset));
    out.residual = multiply(out.correction, err);
    out.logical = !components_in_group(table.code.gens, out.residual);
    return out;
}

int thread_count(std::uint64_t trials) {
    int t = 0;
    if (const char* env = std::getenv("GHZDIST_THREADS")) t = std::atoi(env);
    if (t < 1) t = int(std::thread::hardware_concurrency());
    if (t < 1) t = 1;
    if (t > 64) t = 64;
    if (std::uint64_t(t) > trials) t = int(trials);
    return t;
}

// Splits [0, trials) into contiguous chunks; per-trial RNG streams make the
// aggregate independent of the split.
template <typename F>
distillation_report run_parallel(std::uint64_t trials, F&& per_trial) {
    int nthreads = thread_count(trials);
    std::vector<distillation_report> parts;
    parts.resize(std::size_t(nthreads));
    std::vector<std::thread> pool;
    std::uint64_t chunk = trials / std::uint64_t(nthreads);
    std::uint64_t extra = trials % std::uint64_t(nthreads);
    std::uint64_t lo = 0;
    for (int i = 0; i < nthreads; ++i) {
        std::uint64_t hi = lo + chunk + (std::uint64_t(i) < extra ? 1 : 0);
        pool.emplace_back([&per_trial, &part = parts[std::size_t(i)], lo, hi] {
            for (std::uint64_t t = lo; t < hi; ++t) per_trial(t, part);
        });
        lo = hi;
    }
    for (auto& th : pool) th.join();
    distillation_report total;
    total.trials = trials;
    for (const auto& p : parts) {
        total.failures += p.failures;
        total.stage_bc += p.stage_bc;
        total.stage_c += p.stage_c;
    }
    return total;
}

}  // namespace

double distillation_report::standard_error() const {
    if (trials == 0) return 0.0;
    double p = p_f();
    return std::sqrt(p * (1.0 - p) / double(trials));
}

distill_engine::distill_engine(protocol_config cfg_) : cfg(std::move(cfg_)) {
    if (cfg.trials < 1) throw std::invalid_argument("trials must be at least 1");
    int n = cfg.code.n;

    if (cfg.protocol == protocol_kind::bell) {
        if (cfg.topology == topology_kind::split)
            throw std::invalid_argument("the split topology only applies to GHZ runs");
        if (2 * n > 32) throw std::invalid_argument("Bell runs support at most 16 qubits");
        bc_table = build_table(cfg.code);
        return;
    }

    if (3 * n > 32) throw std::invalid_argument("GHZ runs support at most 10 qubits");
    if (!cfg.code.logicals) attach_logicals(cfg.code);

    if (cfg.placement != clifford_placement::none) {
        auto solved = solve_clifford(required_targets(cfg.code));
        if (!solved)
            throw std::runtime_error(
                "no diagonal Clifford solves this code's conjugation targets");
        rmat = *solved;
        for (int q = 2 * n; q < 3 * n; ++q) c_qubits.push_back(q);
    }

    std::vector<int> ones(std::size_t(cfg.code.r()), 1);
    if (cfg.topology == topology_kind::chain)
        bc_table = build_table(ghz_bc_code(cfg.code, ones, cfg.placement).code);
    else
        bc_table = build_table(cfg.code);
    charlie_table = build_table(charlie_code(cfg.code, ones, ones, cfg.placement));
}

trial_result distill_engine::run_trial(splitmix64& rng, const trial_options& opt) const {
    const stab_code& c = cfg.code;
    int n = c.n;
    trial_result out;

    lockstep l;
    l.rng = &rng;
    if (opt.forced_bits) l.forced = &*opt.forced_bits;
    l.trace = opt.trace;

    if (cfg.protocol == protocol_kind::bell) {
        int width = 2 * n;
        l.ref = new_bell(n);
        l.tri = new_bell(n);
        for (const auto& g : c.gens) l.measure(embed(g, width, 0));

        pauli e = opt.inject_bc ? *opt.inject_bc : sample_error(cfg.channel, n, rng);
        if (e.n != n) throw std::invalid_argument("injected error has the wrong width");
        if (e.x || e.z) l.error_on_trial(embed(e, width, n));

        auto s = diff_syndrome(l, c.gens, width, n, true);
        auto st = correct_stage(l, bc_table, s, e, width, n);
        out.bc_correction = st.correction;
        out.bc_residual = st.residual;
        out.decode_miss = st.miss;
        out.bc_logical = st.logical;
        out.c_correction = pauli::identity(n);
        out.c_residual = pauli::identity(n);
        out.success = !out.decode_miss && l.tri.row_signs() == l.ref.row_signs();
        return out;
    }

    int width = 3 * n;
    bool chain = cfg.topology == topology_kind::chain;
    l.ref = new_ghz(n);
    l.tri = new_ghz(n);

    // Alice measures her generators; her raw outcomes feed forward with no
    // recovery step on A.
    for (const auto& g : c.sf.gens) l.measure(embed(g, width, 0));

    if (chain) {
        if (cfg.placement == clifford_placement::alice) l.clifford_both(rmat, c_qubits);
    } else {
        // split source: Alice also projects B, and any Clifford goes on
        // before the qubits leave her lab
        for (const auto& g : c.sf.gens) l.measure(embed(g, width, n));
        if (cfg.placement != clifford_placement::none) l.clifford_both(rmat, c_qubits);
    }

    int bc_width = chain ? 2 * n : n;
    pauli e_bc = opt.inject_bc ? *opt.inject_bc : sample_error(cfg.channel, bc_width, rng);
    if (e_bc.n != bc_width) throw std::invalid_argument("injected BC error has the wrong width");
    if (e_bc.x || e_bc.z) l.error_on_trial(embed(e_bc, width, n));

    pauli e_c;
    if (!chain) {
        e_c = opt.inject_c ? *opt.inject_c : sample_error(cfg.channel, n, rng);
        if (e_c.n != n) throw std::invalid_argument("injected C error has the wrong width");
        if (e_c.x || e_c.z) l.error_on_trial(embed(e_c, width, 2 * n));
    }

    auto s_bc = diff_syndrome(l, bc_table.code.gens, width, n, true);
    auto st_bc = correct_stage(l, bc_table, s_bc, e_bc, width, n);
    out.bc_correction = st_bc.correction;
    out.bc_residual = st_bc.residual;
    out.decode_miss |= st_bc.miss;
    out.bc_logical = st_bc.logical;

    if (chain) {
        // Bob's own measurement of Alice's generators on B
        for (const auto& g : c.sf.gens) l.measure(embed(g, width, n));
        if (cfg.placement == clifford_placement::bob) l.clifford_both(rmat, c_qubits);
        e_c = opt.inject_c ? *opt.inject_c : sample_error(cfg.channel, n, rng);
        if (e_c.n != n) throw std::invalid_argument("injected C error has the wrong width");
        if (e_c.x || e_c.z) l.error_on_trial(embed(e_c, width, 2 * n));
    }

    auto s_c = diff_syndrome(l, charlie_table->code.gens, width, 2 * n, true);
    auto st_c = correct_stage(l, *charlie_table, s_c, e_c, width, 2 * n);
    out.c_correction = st_c.correction;
    out.c_residual = st_c.residual;
    out.decode_miss |= st_c.miss;
    out.c_logical = st_c.logical;

    out.success = !out.decode_miss && l.tri.row_signs() == l.ref.row_signs();
    return out;
}

distillation_report distill_engine::estimate() const {
    return run_parallel(cfg.trials, [this](std::uint64_t t, distillation_report& part) {
        splitmix64 rng = splitmix64::for_trial(cfg.seed, t);
        auto r = run_trial(rng);
        if (!r.success) ++part.failures;
        if (r.bc_logical) ++part.stage_bc;
        if (r.c_logical) ++part.stage_c;
    });
}

distillation_report qec_baseline(const stab_code& c, const channel_model& ch,
                                 std::uint64_t trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    auto table = build_table(c);
    return run_parallel(trials, [&](std::uint64_t t, distillation_report& part) {
        splitmix64 rng = splitmix64::for_trial(seed, t);
        pauli e = sample_error(ch, c.n, rng);
        bitvec s = syndrome(c, e);
        bool fail;
        if (!table.leaders[s.bits]) {
            fail = true;
        } else {
            pauli residual = multiply(*table.leaders[s.bits], e);
            // strict signed membership: a residual equal to minus a group
            // element (or carrying an imaginary phase) counts as a failure
            fail = !residual.is_hermitian() || group_sign(c.gens, residual) != 1;
        }
        if (fail) {
            ++part.failures;
            ++part.stage_bc;
        }
    });
}

ratio make_ratio(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return {num, den};
}

ghz_diag_state output_state(const ratio& p_f, int k) {
    if (p_f.den <= 0 || p_f.num < 0 || p_f.num > p_f.den)
        throw std::invalid_argument("p_f must be a rational in [0, 1]");
    if (k < 1 || k > 20) throw std::invalid_argument("k out of range");

    ghz_diag_state out;
    out.terms = (std::uint64_t{1} << (3 * k)) - 1;
    out.fidelity = make_ratio(p_f.den - p_f.num, p_f.den);

    long long g = std::gcd(p_f.num, (long long)out.terms);
    __int128 den = (__int128)p_f.den * (long long)(out.terms / std::uint64_t(g));
    if (den > (__int128)0x7fffffffffffffffLL)
        throw std::overflow_error("tail weight denominator does not fit 64 bits");
    out.tail = make_ratio(p_f.num / g, (long long)den);

    if (k <= 4) {
        out.weights.assign(std::size_t(out.terms) + 1, out.tail);
        out.weights[0] = out.fidelity;
    }
    return out;
}

}  // namespace ghzdist
