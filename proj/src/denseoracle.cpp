#include "ghzdist/denseoracle.hpp"

#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

namespace ghzdist::oracle {

namespace {

using cplx = std::complex<double>;

const cplx iota_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

int par(std::uint64_t w) { return std::popcount(w) & 1; }

void require_qubits(int n, int cap, const char* what) {
    if (n < 0 || n > cap)
        throw std::invalid_argument(std::string(what) + ": qubit count out of range");
}

// full matrix of a sub-register operator on a wider register
dense_matrix embed_matrix(const dense_matrix& m, int n_sub, int offset, int n_total) {
    const std::int64_t dim = std::int64_t{1} << n_total;
    const std::int64_t sub = std::int64_t{1} << n_sub;
    const std::int64_t mask = (sub - 1) << offset;
    dense_matrix out = dense_matrix::Zero(dim, dim);
    for (std::int64_t j = 0; j < dim; ++j) {
        const std::int64_t sub_j = (j >> offset) & (sub - 1);
        const std::int64_t rest = j & ~mask;
        for (std::int64_t sub_i = 0; sub_i < sub; ++sub_i)
            out(rest | (sub_i << offset), j) = m(sub_i, sub_j);
    }
    return out;
}

int quad_exponent(const bitmat& r, const std::vector<int>& u) {
    int e = 0;
    for (int j = 0; j < r.rows; ++j) {
        if (!u[std::size_t(j)]) continue;
        e += r.get(j, j);
        for (int l = j + 1; l < r.rows; ++l)
            if (u[std::size_t(l)]) e += 2 * r.get(j, l);
    }
    return e & 3;
}

void apply_diag_subset(const bitmat& r, const std::vector<int>& qubits, dense_state& v) {
    std::vector<int> u(qubits.size());
    for (std::int64_t idx = 0; idx < v.size(); ++idx) {
        for (std::size_t j = 0; j < qubits.size(); ++j)
            u[j] = int((std::uint64_t(idx) >> qubits[j]) & 1);
        v[idx] *= iota_pow[quad_exponent(r, u)];
    }
}

outcome_source fixed_bit(int b) {
    return [b] { return b; };
}

}  // namespace

dense_matrix dense_pauli(const pauli& p) {
    require_qubits(p.n, 7, "dense_pauli");
    const std::int64_t dim = std::int64_t{1} << p.n;
    const cplx amp = iota_pow[(p.phase + std::popcount(p.x & p.z)) & 3];
    dense_matrix m = dense_matrix::Zero(dim, dim);
    for (std::int64_t v = 0; v < dim; ++v)
        m(v ^ std::int64_t(p.x), v) = amp * (par(p.z & std::uint64_t(v)) ? -1.0 : 1.0);
    return m;
}

dense_state apply_pauli(const pauli& p, const dense_state& v) {
    require_qubits(p.n, 14, "apply_pauli");
    const std::int64_t dim = std::int64_t{1} << p.n;
    if (v.size() != dim) throw std::invalid_argument("apply_pauli: state dimension mismatch");
    const cplx amp = iota_pow[(p.phase + std::popcount(p.x & p.z)) & 3];
    dense_state out(dim);
    for (std::int64_t i = 0; i < dim; ++i)
        out[i ^ std::int64_t(p.x)] = amp * (par(p.z & std::uint64_t(i)) ? -1.0 : 1.0) * v[i];
    return out;
}

dense_matrix code_projector(const stab_code& c) {
    require_qubits(c.n, 7, "code_projector");
    const std::int64_t dim = std::int64_t{1} << c.n;
    dense_matrix m = dense_matrix::Identity(dim, dim);
    for (const pauli& g : c.gens)
        m = 0.5 * (m + dense_pauli(g) * m);
    return m;
}

dense_matrix diag_clifford_unitary(const bitmat& r) {
    if (r.rows != r.cols || !r.is_symmetric())
        throw std::invalid_argument("diag_clifford_unitary: matrix must be symmetric");
    require_qubits(r.rows, 7, "diag_clifford_unitary");
    const std::int64_t dim = std::int64_t{1} << r.rows;
    dense_matrix m = dense_matrix::Zero(dim, dim);
    std::vector<int> u(std::size_t(r.rows));
    for (std::int64_t v = 0; v < dim; ++v) {
        for (int j = 0; j < r.rows; ++j) u[std::size_t(j)] = int((v >> j) & 1);
        m(v, v) = iota_pow[quad_exponent(r, u)];
    }
    return m;
}

dense_matrix ghz_map(const dense_matrix& m) {
    std::int64_t dim = m.rows();
    if (dim != m.cols() || dim < 1 || dim > 8 || (dim & (dim - 1)))
        throw std::invalid_argument("ghz_map: need a square matrix on at most three qubits");
    int n = 0;
    while ((std::int64_t{1} << n) < dim) ++n;
    dense_matrix out = dense_matrix::Zero(dim * dim, dim * dim);
    for (std::int64_t x = 0; x < dim; ++x)
        for (std::int64_t y = 0; y < dim; ++y)
            out(x | (x << n), y | (y << n)) = m(x, y);
    return out;
}

dense_state ghz_state(int n) {
    require_qubits(n, 4, "ghz_state");
    if (n < 1) throw std::invalid_argument("ghz_state: need at least one triple");
    const std::int64_t dim = std::int64_t{1} << (3 * n);
    dense_state v = dense_state::Zero(dim);
    const double amp = 1.0 / std::sqrt(double(std::int64_t{1} << n));
    for (std::int64_t x = 0; x < (std::int64_t{1} << n); ++x)
        v[x | (x << n) | (x << (2 * n))] = amp;
    return v;
}

dense_state tableau_state(const tableau& t) {
    require_qubits(t.n, 14, "tableau_state");
    if (int(t.rows.size()) != t.n)
        throw std::invalid_argument("tableau_state: tableau does not pin a unique state");
    const std::int64_t dim = std::int64_t{1} << t.n;
    auto project_seed = [&](dense_state v) {
        for (const pauli& row : t.rows) v = 0.5 * (v + apply_pauli(row, v));
        return v;
    };
    // the projector has rank one, so some basis seed always survives
    dense_state v = project_seed(dense_state::Constant(dim, 1.0 / std::sqrt(double(dim))));
    if (v.squaredNorm() > 1e-9) return v.normalized();
    for (std::int64_t j = 0; j < dim; ++j) {
        dense_state seed = dense_state::Zero(dim);
        seed[j] = 1.0;
        v = project_seed(seed);
        if (v.squaredNorm() > 1e-9) return v.normalized();
    }
    throw std::logic_error("tableau_state: projector annihilated every seed");
}

double state_mismatch(const dense_state& a, const dense_state& b) {
    if (a.size() != b.size()) throw std::invalid_argument("state_mismatch: dimension mismatch");
    return 1.0 - std::abs(a.normalized().dot(b.normalized()));
}

double check_lemma4(const dense_matrix& m, int n) {
    require_qubits(n, 3, "check_lemma4");
    const std::int64_t dim = std::int64_t{1} << n;
    if (m.rows() != dim || m.cols() != dim)
        throw std::invalid_argument("check_lemma4: matrix dimension mismatch");
    const dense_state g = ghz_state(n);
    const dense_state lhs = embed_matrix(m, n, 0, 3 * n) * g;
    const dense_matrix stretched = ghz_map(m.transpose());
    const dense_state rhs = embed_matrix(stretched, 2 * n, n, 3 * n) * g;
    return (lhs - rhs).norm();
}

double check_theorem6(std::uint64_t a, std::uint64_t b, int eps, int n) {
    require_qubits(n, 3, "check_theorem6");
    if (eps != 1 && eps != -1) throw std::invalid_argument("check_theorem6: sign must be +-1");
    const std::int64_t dim = std::int64_t{1} << n;
    const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    a &= mask;
    b &= mask;

    const dense_matrix hat_i = ghz_map(dense_matrix::Identity(dim, dim));
    const dense_matrix hat_e = ghz_map(dense_pauli(pauli(n, a, b, 0)));

    // joint operator E(a,b) on the first copy, E(a,0) on the second
    const pauli joint(2 * n, a | (a << n), b, 0);
    const dense_matrix joint_d = dense_pauli(joint);
    double dev = (hat_e - joint_d * hat_i).norm();

    // product-of-projectors form of the stretched identity
    const std::int64_t dim2 = dim * dim;
    dense_matrix prod = dense_matrix::Identity(dim2, dim2);
    for (int i = 0; i < n; ++i) {
        const std::uint64_t e_i = std::uint64_t{1} << i;
        prod = 0.5 * (prod + dense_pauli(pauli(2 * n, 0, e_i | (e_i << n), 0)) * prod);
    }
    dev = std::max(dev, (hat_i - prod).norm());

    // full projector identity for a measurement with sign eps
    const double sgn = eps * (par(a & b) ? -1.0 : 1.0);
    const dense_matrix lhs = 0.5 * (hat_i + sgn * hat_e);
    const dense_matrix rhs =
        0.5 * (dense_matrix::Identity(dim2, dim2) + sgn * joint_d) * prod;
    return std::max(dev, (lhs - rhs).norm());
}

double check_theorem7(const dense_matrix& m, const dense_matrix& w, int n) {
    require_qubits(n, 2, "check_theorem7");
    const std::int64_t dim = std::int64_t{1} << n;
    if (m.rows() != dim || m.cols() != dim || w.rows() != dim || w.cols() != dim)
        throw std::invalid_argument("check_theorem7: matrix dimension mismatch");
    const dense_state g = ghz_state(n);
    const dense_state base = embed_matrix(m, n, 0, 3 * n) * g;
    const dense_state lhs = embed_matrix(w, n, n, 3 * n) * base;
    dense_state rhs = embed_matrix(w, n, 2 * n, 3 * n) * base;
    // exchange the second and third blocks
    dense_state swapped(rhs.size());
    const std::int64_t mask = dim - 1;
    for (std::int64_t i = 0; i < rhs.size(); ++i) {
        const std::int64_t xa = i & mask, xb = (i >> n) & mask, xc = (i >> (2 * n)) & mask;
        swapped[xa | (xc << n) | (xb << (2 * n))] = rhs[i];
    }
    return (lhs - swapped).norm();
}

css_pair css_bitflip3() {
    css_pair p;
    p.n = 3;
    p.c2 = bitmat(0, 3);
    p.c1_perp = bitmat(2, 3);
    p.c1_perp.set_row(0, bitvec(3, 0b011));
    p.c1_perp.set_row(1, bitvec(3, 0b110));
    p.quotient = bitmat(1, 3);
    p.quotient.set_row(0, bitvec(3, 0b111));
    return p;
}

css_pair css_steane() {
    css_pair p;
    p.n = 7;
    bitmat h(3, 7);
    for (int col = 0; col < 7; ++col)
        for (int row = 0; row < 3; ++row)
            if (((col + 1) >> row) & 1) h.set(row, col, 1);
    p.c2 = h;
    p.c1_perp = h;
    p.quotient = bitmat(1, 7);
    p.quotient.set_row(0, bitvec(7, 0b1111111));
    return p;
}

css_pair css_trivial(int n) {
    require_qubits(n, 7, "css_trivial");
    css_pair p;
    p.n = n;
    p.c2 = bitmat(0, n);
    p.c1_perp = bitmat(0, n);
    p.quotient = bitmat::identity(n);
    return p;
}

dense_matrix css_bell_amplitudes(const css_pair& pair) {
    require_qubits(pair.n, 7, "css_bell_amplitudes");
    const int n = pair.n;
    if (pair.c2.cols != n || pair.c1_perp.cols != n || pair.quotient.cols != n)
        throw std::invalid_argument("css pair: column counts must equal n");
    if (rank(pair.c2) != pair.c2.rows || rank(pair.c1_perp) != pair.c1_perp.rows)
        throw std::invalid_argument("css pair: generator matrices must have full row rank");
    const int k = n - pair.c2.rows - pair.c1_perp.rows;
    if (k != pair.quotient.rows)
        throw std::invalid_argument("css pair: quotient row count must equal k");
    for (int i = 0; i < pair.c2.rows; ++i)
        for (int j = 0; j < pair.c1_perp.rows; ++j)
            if (pair.c2.row(i).dot(pair.c1_perp.row(j)))
                throw std::invalid_argument("css pair: X and Z spaces are not orthogonal");
    for (int i = 0; i < pair.quotient.rows; ++i)
        for (int j = 0; j < pair.c1_perp.rows; ++j)
            if (pair.quotient.row(i).dot(pair.c1_perp.row(j)))
                throw std::invalid_argument("css pair: quotient rows must lie in the larger code");
    bitmat joined = pair.c2;
    for (int i = 0; i < pair.quotient.rows; ++i) joined.append_row(pair.quotient.row(i));
    if (rank(joined) != joined.rows)
        throw std::invalid_argument("css pair: quotient rows must be independent of the smaller code");

    std::vector<pauli> gens;
    for (int i = 0; i < pair.c2.rows; ++i) gens.push_back(pauli(n, pair.c2.row(i).bits, 0, 0));
    for (int i = 0; i < pair.c1_perp.rows; ++i)
        gens.push_back(pauli(n, 0, pair.c1_perp.row(i).bits, 0));
    dense_matrix proj;
    if (gens.empty()) {
        const std::int64_t dim = std::int64_t{1} << n;
        proj = dense_matrix::Identity(dim, dim);
    } else {
        proj = code_projector(from_generators(gens));
    }

    // projecting both halves of n pairs, then renormalizing by the
    // all-plus-one syndrome probability
    const double scale = std::sqrt(double(std::int64_t{1} << (n - k))) /
                         std::sqrt(double(std::int64_t{1} << n));
    return scale * (proj * proj.transpose());
}

double check_css_bell(const css_pair& pair) {
    const dense_matrix lhs = css_bell_amplitudes(pair);
    const int n = pair.n, k = pair.quotient.rows, r2 = pair.c2.rows;
    const std::int64_t dim = std::int64_t{1} << n;

    dense_matrix ref = dense_matrix::Zero(dim, dim);
    const double enc_amp = 1.0 / std::sqrt(double(std::int64_t{1} << r2));
    const double pair_amp = 1.0 / std::sqrt(double(std::int64_t{1} << k));
    for (std::uint64_t wbits = 0; wbits < (std::uint64_t{1} << k); ++wbits) {
        const bitvec u = k ? mul(bitvec(k, wbits), pair.quotient) : bitvec(n, 0);
        dense_state enc = dense_state::Zero(dim);
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << r2); ++s) {
            std::uint64_t y = u.bits;
            for (int i = 0; i < r2; ++i)
                if ((s >> i) & 1) y ^= pair.c2.row(i).bits;
            enc[std::int64_t(y)] += enc_amp;
        }
        ref += pair_amp * (enc * enc.transpose());
    }
    return (lhs - ref).norm();
}

double check_measure_sequence(const tableau& start,
                              const std::vector<std::pair<pauli, int>>& seq) {
    tableau t = start;
    dense_state v = tableau_state(start);
    double worst = 0.0;
    for (const auto& [p, want] : seq) {
        const measure_result res = t.measure(p, fixed_bit(want));
        dense_state w = 0.5 * (v + double(res.m ? -1 : 1) * apply_pauli(p, v));
        const double nrm2 = w.squaredNorm();
        worst = std::max(worst, std::abs(nrm2 - (res.deterministic ? 1.0 : 0.5)));
        if (nrm2 < 1e-12) return 1.0;
        v = w / std::sqrt(nrm2);
    }
    return std::max(worst, state_mismatch(v, tableau_state(t)));
}

double check_trace_replay(const tableau& start, const std::vector<trace_event>& events) {
    tableau t = start;
    dense_state v = tableau_state(start);
    double worst = 0.0;
    for (const trace_event& ev : events) {
        switch (ev.op) {
            case trace_event::kind::measure: {
                const measure_result res = t.measure(ev.p, fixed_bit(ev.m));
                if (res.m != ev.m || res.deterministic != ev.deterministic) return 1.0;
                dense_state w = 0.5 * (v + double(ev.m ? -1 : 1) * apply_pauli(ev.p, v));
                const double nrm2 = w.squaredNorm();
                worst = std::max(worst, std::abs(nrm2 - (res.deterministic ? 1.0 : 0.5)));
                if (nrm2 < 1e-12) return 1.0;
                v = w / std::sqrt(nrm2);
                break;
            }
            case trace_event::kind::error:
                t.apply_error(ev.p);
                v = apply_pauli(ev.p, v);
                break;
            case trace_event::kind::clifford:
                t.apply_diag_clifford(ev.r, ev.qubits);
                apply_diag_subset(ev.r, ev.qubits, v);
                break;
        }
    }
    return std::max(worst, state_mismatch(v, tableau_state(t)));
}

namespace {

std::uint64_t rnd_bits(std::mt19937_64& rng, int n) {
    return rng() & ((std::uint64_t{1} << n) - 1);
}

pauli rnd_pauli(std::mt19937_64& rng, int n, bool hermitian) {
    pauli p(n, rnd_bits(rng, n), rnd_bits(rng, n), 0);
    p.phase = hermitian ? int(rng() & 2) : int(rng() & 3);
    return p;
}

dense_matrix rnd_dense(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> dist;
    const std::int64_t dim = std::int64_t{1} << n;
    dense_matrix m(dim, dim);
    for (std::int64_t i = 0; i < dim; ++i)
        for (std::int64_t j = 0; j < dim; ++j) m(i, j) = cplx(dist(rng), dist(rng));
    return m;
}

bitmat rnd_symmetric(std::mt19937_64& rng, int n) {
    bitmat r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const int b = int(rng() & 1);
            r.set(i, j, b);
            r.set(j, i, b);
        }
    return r;
}

// eigenvalue defect of a claimed +1 eigenvector
double stabilizer_defect(const pauli& s, const dense_state& v) {
    return (apply_pauli(s, v) - v).norm();
}

double suite_pauli_product_exhaustive() {
    double dev = 0.0;
    for (int xa = 0; xa < 2; ++xa)
        for (int za = 0; za < 2; ++za)
            for (int pa = 0; pa < 4; ++pa)
                for (int xb = 0; xb < 2; ++xb)
                    for (int zb = 0; zb < 2; ++zb)
                        for (int pb = 0; pb < 4; ++pb) {
                            const pauli p(1, xa, za, pa), q(1, xb, zb, pb);
                            dev = std::max(dev, (dense_pauli(multiply(p, q)) -
                                                 dense_pauli(p) * dense_pauli(q))
                                                    .norm());
                        }
    return dev;
}

double suite_pauli_product_random(std::mt19937_64& rng) {
    double dev = 0.0;
    for (int n = 2; n <= 3; ++n)
        for (int trial = 0; trial < 250; ++trial) {
            const pauli p = rnd_pauli(rng, n, false), q = rnd_pauli(rng, n, false);
            dev = std::max(
                dev, (dense_pauli(multiply(p, q)) - dense_pauli(p) * dense_pauli(q)).norm());
        }
    return dev;
}

double suite_transpose_sign(std::mt19937_64& rng) {
    double dev = 0.0;
    auto defect = [](const pauli& p) {
        const double sgn = par(p.x & p.z) ? -1.0 : 1.0;
        const dense_matrix d = dense_pauli(p);
        return (d.transpose() - sgn * d).norm();
    };
    for (int x = 0; x < 2; ++x)
        for (int z = 0; z < 2; ++z)
            for (int ph = 0; ph < 4; ++ph) dev = std::max(dev, defect(pauli(1, x, z, ph)));
    for (int trial = 0; trial < 100; ++trial)
        dev = std::max(dev, defect(rnd_pauli(rng, 1 + int(rng() % 3), false)));
    return dev;
}

double suite_code_projectors() {
    double dev = 0.0;
    for (const stab_code& c : {five_qubit(), bitflip3(), yy3(), steane()}) {
        const dense_matrix proj = code_projector(c);
        dev = std::max(dev, (proj * proj - proj).norm());
        dev = std::max(dev, std::abs(proj.trace() - cplx(double(std::int64_t{1} << c.k), 0)));
    }
    const dense_matrix zp = code_projector(from_generators({parse_pauli("+Z")}));
    dense_matrix want(2, 2);
    want << 1, 0, 0, 0;
    return std::max(dev, (zp - want).norm());
}

double suite_stretch_homomorphism(std::mt19937_64& rng) {
    double dev = 0.0;
    for (int n = 1; n <= 3; ++n)
        for (int trial = 0; trial < 20; ++trial) {
            const dense_matrix a = rnd_dense(rng, n), b = rnd_dense(rng, n);
            dev = std::max(dev, (ghz_map(a * b) - ghz_map(a) * ghz_map(b)).norm());
            const cplx alpha(0.7, -0.3), beta(-1.1, 0.2);
            dev = std::max(dev, (ghz_map(alpha * a + beta * b) -
                                 (alpha * ghz_map(a) + beta * ghz_map(b)))
                                    .norm());
        }
    for (const stab_code& c : {bitflip3(), yy3()}) {
        const dense_matrix stretched = ghz_map(code_projector(c));
        dev = std::max(dev, (stretched * stretched - stretched).norm());
    }
    dense_matrix want = dense_matrix::Zero(4, 4);
    want(0, 0) = want(3, 3) = 1;
    return std::max(dev, (ghz_map(dense_matrix::Identity(2, 2)) - want).norm());
}

double suite_lemma4(std::mt19937_64& rng) {
    double dev = 0.0;
    for (int n = 1; n <= 3; ++n) {
        const std::int64_t dim = std::int64_t{1} << n;
        dev = std::max(dev, check_lemma4(dense_matrix::Identity(dim, dim), n));
        for (int trial = 0; trial < 20; ++trial)
            dev = std::max(dev, check_lemma4(rnd_dense(rng, n), n));
    }
    // a Z projector on the single triple collapses it to the all-zero state
    dense_matrix zproj(2, 2);
    zproj << 1, 0, 0, 0;
    dev = std::max(dev, check_lemma4(zproj, 1));
    const dense_state post = (embed_matrix(zproj, 1, 0, 3) * ghz_state(1)).normalized();
    dense_state want = dense_state::Zero(8);
    want[0] = 1.0;
    return std::max(dev, (post - want).norm());
}

double suite_theorem6(std::mt19937_64& rng) {
    double dev = 0.0;
    for (std::uint64_t a = 0; a < 2; ++a)
        for (std::uint64_t b = 0; b < 2; ++b)
            for (int eps : {1, -1}) dev = std::max(dev, check_theorem6(a, b, eps, 1));
    for (int n = 1; n <= 3; ++n) dev = std::max(dev, check_theorem6(0, 0, 1, n));
    for (int trial = 0; trial < 20; ++trial)
        dev = std::max(dev, check_theorem6(rng(), rng(), (rng() & 1) ? 1 : -1, 2));
    for (int trial = 0; trial < 5; ++trial)
        dev = std::max(dev, check_theorem6(rng(), rng(), (rng() & 1) ? 1 : -1, 3));
    return dev;
}

double suite_theorem7(std::mt19937_64& rng) {
    double dev = 0.0;
    for (int n = 1; n <= 2; ++n) {
        const std::int64_t dim = std::int64_t{1} << n;
        dev = std::max(dev,
                       check_theorem7(rnd_dense(rng, n), dense_matrix::Identity(dim, dim), n));
        for (int trial = 0; trial < 5; ++trial)
            dev = std::max(dev, check_theorem7(rnd_dense(rng, n), rnd_dense(rng, n), n));
    }
    return std::max(dev, check_theorem7(dense_matrix::Identity(2, 2),
                                        dense_pauli(parse_pauli("+X")), 1));
}

double suite_css_bell() {
    double dev = check_css_bell(css_bitflip3());
    // the projected bit-flip state is the repetition-encoded pair
    const dense_matrix amps = css_bell_amplitudes(css_bitflip3());
    dense_matrix want = dense_matrix::Zero(8, 8);
    want(0, 0) = want(7, 7) = 1.0 / std::sqrt(2.0);
    dev = std::max(dev, (amps - want).norm());
    dev = std::max(dev, check_css_bell(css_trivial(3)));
    const dense_matrix triv = css_bell_amplitudes(css_trivial(3));
    dev = std::max(dev, (triv - dense_matrix::Identity(8, 8) / std::sqrt(8.0)).norm());
    return std::max(dev, check_css_bell(css_steane()));
}

double suite_measure_dense(std::mt19937_64& rng) {
    double dev = 0.0;

    // entangled pair, first-qubit Z comes out -1: post state is |11>
    tableau bell = new_bell(1);
    dev = std::max(dev, check_measure_sequence(bell, {{parse_pauli("+ZI"), 1}}));
    {
        tableau t = bell;
        t.measure(parse_pauli("+ZI"), fixed_bit(1));
        dense_state want = dense_state::Zero(4);
        want[3] = 1.0;
        dev = std::max(dev, state_mismatch(tableau_state(t), want));
    }

    // entangled pair, first-qubit Y comes out +1
    dev = std::max(dev, check_measure_sequence(bell, {{parse_pauli("+YI"), 0}}));
    {
        tableau t = bell;
        t.measure(parse_pauli("+YI"), fixed_bit(0));
        const dense_state v = tableau_state(t);
        dev = std::max(dev, stabilizer_defect(parse_pauli("+YI"), v));
        dev = std::max(dev, stabilizer_defect(pauli(2, 0b11, 0b11, 2), v));
    }

    // single triple: Z, X and Y measurements on the first block
    const tableau ghz1 = new_ghz(1);
    dev = std::max(dev, check_measure_sequence(ghz1, {{embed(parse_pauli("+Z"), 3, 0), 0}}));
    {
        tableau t = ghz1;
        t.measure(embed(parse_pauli("+Z"), 3, 0), fixed_bit(0));
        dense_state want = dense_state::Zero(8);
        want[0] = 1.0;
        dev = std::max(dev, state_mismatch(tableau_state(t), want));
    }
    dev = std::max(dev, check_measure_sequence(ghz1, {{embed(parse_pauli("+X"), 3, 0), 0}}));
    {
        tableau t = ghz1;
        t.measure(embed(parse_pauli("+X"), 3, 0), fixed_bit(0));
        const dense_state v = tableau_state(t);
        dev = std::max(dev, stabilizer_defect(pauli(3, 0b110, 0, 0), v));
        dev = std::max(dev, stabilizer_defect(pauli(3, 0, 0b110, 0), v));
    }
    dev = std::max(dev, check_measure_sequence(ghz1, {{embed(parse_pauli("+Y"), 3, 0), 0}}));
    {
        tableau t = ghz1;
        t.measure(embed(parse_pauli("+Y"), 3, 0), fixed_bit(0));
        const dense_state v = tableau_state(t);
        dev = std::max(dev, stabilizer_defect(pauli(3, 0b110, 0b010, 2), v));
        dev = std::max(dev, stabilizer_defect(pauli(3, 0, 0b110, 0), v));
    }

    // random three-qubit sequences from the all-zero state
    for (int trial = 0; trial < 100; ++trial) {
        tableau t(3);
        for (int i = 0; i < 3; ++i) t.append_row(pauli(3, 0, std::uint64_t{1} << i, 0));
        std::vector<std::pair<pauli, int>> seq;
        for (int step = 0; step < 6; ++step)
            seq.emplace_back(rnd_pauli(rng, 3, true), int(rng() & 1));
        dev = std::max(dev, check_measure_sequence(t, seq));
    }
    return dev;
}

double suite_diag_clifford(std::mt19937_64& rng) {
    double dev = 0.0;
    auto conj_defect = [](const bitmat& r, const pauli& p) {
        tableau t(p.n);
        t.append_row(p);
        std::vector<int> all(std::size_t(p.n));
        for (int i = 0; i < p.n; ++i) all[std::size_t(i)] = i;
        t.apply_diag_clifford(r, all);
        const dense_matrix u = diag_clifford_unitary(r);
        return (dense_pauli(t.rows[0]) - u * dense_pauli(p) * u.adjoint()).norm();
    };
    for (int bits = 0; bits < 8; ++bits) {
        bitmat r(2, 2);
        r.set(0, 0, bits & 1);
        r.set(1, 1, (bits >> 1) & 1);
        r.set(0, 1, (bits >> 2) & 1);
        r.set(1, 0, (bits >> 2) & 1);
        for (std::uint64_t x = 0; x < 4; ++x)
            for (std::uint64_t z = 0; z < 4; ++z)
                dev = std::max(dev, conj_defect(r, pauli(2, x, z, 0)));
    }
    for (int trial = 0; trial < 30; ++trial)
        dev = std::max(dev, conj_defect(rnd_symmetric(rng, 3), rnd_pauli(rng, 3, true)));
    return dev;
}

double suite_protocol_trace() {
    protocol_config cfg;
    cfg.code = yy3();
    cfg.protocol = protocol_kind::ghz;
    cfg.placement = clifford_placement::alice;
    cfg.topology = topology_kind::chain;
    cfg.channel = channel_model::depolarizing(0.0);
    cfg.trials = 1;
    cfg.seed = 7;
    const distill_engine engine(cfg);

    std::vector<trace_event> events;
    trial_options opts;
    opts.forced_bits = std::vector<int>{1, 0, 0, 1, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0};
    opts.inject_bc = pauli(6, 0b000001, 0, 0);
    opts.inject_c = pauli(3, 0, 0b010, 0);
    opts.trace = &events;
    splitmix64 rng = splitmix64::for_trial(cfg.seed, 0);
    engine.run_trial(rng, opts);
    return check_trace_replay(new_ghz(3), events);
}

}  // namespace

std::vector<check_result> run_verify_suite(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<check_result> out;
    auto add = [&out](const std::string& name, double dev, double tol) {
        out.push_back({name, dev < tol, dev, tol});
    };
    add("pauli product, one qubit, exhaustive", suite_pauli_product_exhaustive(), 1e-10);
    add("pauli product, random two and three qubits", suite_pauli_product_random(rng), 1e-10);
    add("pauli transpose sign", suite_transpose_sign(rng), 1e-10);
    add("code projectors", suite_code_projectors(), 1e-10);
    add("stretch map homomorphism", suite_stretch_homomorphism(rng), 1e-10);
    add("matrix stretch identity", suite_lemma4(rng), 1e-10);
    add("induced joint projector identity", suite_theorem6(rng), 1e-10);
    add("swap equivalence", suite_theorem7(rng), 1e-10);
    add("logical pairs from projected pairs", suite_css_bell(), 1e-9);
    add("measurements match dense projectors", suite_measure_dense(rng), 1e-10);
    add("diagonal clifford conjugation", suite_diag_clifford(rng), 1e-10);
    add("protocol trace matches dense replay", suite_protocol_trace(), 1e-9);
    return out;
}

}  // namespace ghzdist::oracle
