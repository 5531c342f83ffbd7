#include "ghzdist/diagclifford.hpp"

#include <bit>
#include <stdexcept>

namespace ghzdist {

clifford_problem required_targets(const stab_code& c) {
    if (!c.logicals) throw std::invalid_argument("required_targets needs attached logicals");
    clifford_problem p{bitmat(0, c.n), bitmat(0, c.n)};
    for (int i = 0; i < c.sf.r_x; ++i) {
        p.a.append_row(bitvec(c.n, c.sf.gens[size_t(i)].x));
        p.b.append_row(bitvec(c.n, c.sf.gens[size_t(i)].z));
    }
    for (const auto& x : c.logicals->xbar) {
        p.a.append_row(bitvec(c.n, x.x));
        p.b.append_row(bitvec(c.n, x.z));
    }
    return p;
}

bool feasible(const clifford_problem& p) {
    if (p.a.rows != p.b.rows || p.a.cols != p.b.cols)
        throw std::invalid_argument("target shapes differ");
    return mul(p.a, p.b.transposed()).is_symmetric();
}

std::optional<bitmat> solve_clifford(const clifford_problem& p) {
    if (p.a.rows != p.b.rows || p.a.cols != p.b.cols)
        throw std::invalid_argument("target shapes differ");
    const int n = p.a.cols;
    if (n * (n + 1) / 2 > 63)
        throw std::invalid_argument("diagonal Clifford solve is limited to 10 qubits");
    auto idx = [n](int lo, int hi) { return lo * n - lo * (lo - 1) / 2 + (hi - lo); };

    // unknowns: the upper triangle of R; one equation per target row and column
    bitmat m(0, n * (n + 1) / 2);
    std::vector<int> rhs;
    for (int t = 0; t < p.a.rows; ++t) {
        bitvec a = p.a.row(t);
        for (int q = 0; q < n; ++q) {
            bitvec eq(n * (n + 1) / 2);
            for (int pp = 0; pp < n; ++pp)
                if (a.get(pp)) eq.set(idx(std::min(pp, q), std::max(pp, q)), 1);
            m.append_row(eq);
            rhs.push_back(p.b.get(t, q));
        }
    }
    auto x = solve_tall(m, rhs);
    if (!x) return std::nullopt;
    bitmat r(n, n);
    for (int lo = 0; lo < n; ++lo)
        for (int hi = lo; hi < n; ++hi) {
            int v = x->get(idx(lo, hi));
            r.set(lo, hi, v);
            r.set(hi, lo, v);
        }
    return r;
}

std::vector<int> sign_fixups(const clifford_problem& p, const bitmat& r) {
    std::vector<int> out;
    for (int t = 0; t < p.a.rows; ++t) {
        bitvec a = p.a.row(t);
        std::uint64_t ar = mul(a, r).bits;
        int parity = std::popcount(a.bits & p.b.row(t).bits & ar) & 1;
        // same carry correction as tableau::apply_diag_clifford: entries of
        // the integer product a R that wrap past 1 flip the sign under a's X part
        for (int i = 0; i < r.rows; ++i)
            if (a.get(i)) parity ^= int(std::popcount(a.bits & r.row(i).bits) >> 1) & 1;
        out.push_back(parity ? -1 : 1);
    }
    return out;
}

std::string gate_reading(const bitmat& r) {
    if (r.rows != r.cols || !r.is_symmetric())
        throw std::invalid_argument("gate reading needs a symmetric matrix");
    std::string out;
    for (int i = 0; i < r.rows; ++i)
        if (r.get(i, i)) out += "P " + std::to_string(i) + "\n";
    for (int i = 0; i < r.rows; ++i)
        for (int j = i + 1; j < r.cols; ++j)
            if (r.get(i, j)) out += "CZ " + std::to_string(i) + " " + std::to_string(j) + "\n";
    if (out.empty()) out = "identity\n";
    return out;
}

}  // namespace ghzdist
