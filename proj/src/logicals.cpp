#include "ghzdist/logicals.hpp"

#include <stdexcept>

#include "ghzdist/tableau.hpp"

namespace ghzdist {

namespace {

std::uint64_t lowmask(int n) { return (n == 64) ? ~0ull : (1ull << n) - 1; }

void validate(const stab_code& c, const logical_paulis& lp) {
    const int k = c.k;
    if (int(lp.zbar.size()) != k || int(lp.xbar.size()) != k)
        throw std::logic_error("logical generation: wrong count");
    for (const auto& z : lp.zbar)
        if (z.x != 0 || z.phase != 0)
            throw std::logic_error("logical generation: zbar not purely Z with sign +1");
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (commutes(lp.zbar[size_t(i)], lp.xbar[size_t(j)]) != (i == j ? 1 : 0))
                throw std::logic_error("logical generation: pairing is not delta_ij");
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (commutes(lp.xbar[size_t(i)], lp.xbar[size_t(j)]))
                throw std::logic_error("logical generation: logical X generators anticommute");
    for (const auto& g : c.gens) {
        for (const auto& z : lp.zbar)
            if (commutes(z, g)) throw std::logic_error("logical generation: zbar hits a generator");
        for (const auto& x : lp.xbar)
            if (commutes(x, g)) throw std::logic_error("logical generation: xbar hits a generator");
    }
    bitmat m(0, 2 * c.n);
    for (const auto& g : c.gens) m.append_row(g.symplectic());
    for (const auto& z : lp.zbar) m.append_row(z.symplectic());
    for (const auto& x : lp.xbar) m.append_row(x.symplectic());
    if (rank(m) != c.r() + 2 * k)
        throw std::logic_error("logical generation: logicals dependent on the generators");
}

}  // namespace

std::vector<pauli> fix_pairing(const std::vector<pauli>& zbars,
                               const std::vector<pauli>& xbars) {
    if (zbars.size() != xbars.size())
        throw std::invalid_argument("fix_pairing: size mismatch");
    const int k = int(zbars.size());
    if (k == 0) return {};
    const int n = zbars[0].n;
    bitmat t(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            t.set(i, j, bitvec(n, zbars[size_t(i)].z).dot(bitvec(n, xbars[size_t(j)].x)));
    if (t == bitmat::identity(k)) return zbars;
    auto tinv = inverse(t);
    if (!tinv) throw std::logic_error("logical pairing matrix is singular");
    bitmat f(0, n);
    for (const auto& z : zbars) f.append_row(bitvec(n, z.z));
    bitmat fixed = mul(*tinv, f);
    std::vector<pauli> out;
    for (int i = 0; i < k; ++i) out.push_back(pauli(n, 0, fixed.row(i).bits, 0));
    return out;
}

logical_paulis generate_logicals(const stab_code& c) {
    const int n = c.n, k = c.k;
    if (3 * n > 32)
        throw std::invalid_argument("logical generation is limited to 10 data qubits");

    // 2n rows on the three registers A, B, C: n rows Z_Ai Z_Bi, then n rows
    // X_Ai X_Bi X_Ci. Not a full tableau; the measurements below always
    // anticommute with something, so every one replaces a row.
    tableau t(3 * n);
    for (int i = 0; i < n; ++i)
        t.append_row(pauli(3 * n, 0, (1ull << i) | (1ull << (n + i)), 0));
    for (int i = 0; i < n; ++i)
        t.append_row(pauli(3 * n, (1ull << i) | (1ull << (n + i)) | (1ull << (2 * n + i)), 0, 0));

    outcome_source plus = [] { return 0; };
    std::vector<char> replaced(size_t(2 * n), 0);
    bitmat h(0, 2 * n);  // A columns of measured generators, then of harvested logicals
    for (const auto& g : c.sf.gens) {
        auto res = t.measure(embed(g, 3 * n, 0), plus);
        if (res.replaced_row < 0)
            throw std::logic_error("logical generation: generator measurement was deterministic");
        replaced[size_t(res.replaced_row)] = 1;
        h.append_row(g.symplectic());
    }

    logical_paulis lp;
    const std::uint64_t ma = lowmask(n);
    for (int i = 0; i < n; ++i) {
        if (replaced[size_t(i)]) continue;
        const pauli& row = t.rows[size_t(i)];
        if ((row.x & ma) != 0)
            throw std::logic_error("logical generation: Z-block row acquired an X component");
        bitvec acol = concat(bitvec(n, 0), bitvec(n, row.z & ma));
        if (solve_left(h, acol).has_value()) continue;
        lp.zbar.push_back(pauli(n, 0, row.z & ma, 0));
        h.append_row(acol);
    }
    if (int(lp.zbar.size()) != k)
        throw std::logic_error("logical generation: harvested " +
                               std::to_string(lp.zbar.size()) + " logical Z, expected " +
                               std::to_string(k));
    for (int i = n; i < 2 * n; ++i) {
        if (replaced[size_t(i)]) continue;
        const pauli& row = t.rows[size_t(i)];
        bitvec acol = concat(bitvec(n, row.x & ma), bitvec(n, row.z & ma));
        if (solve_left(h, acol).has_value()) continue;
        lp.xbar.push_back(pauli(n, row.x & ma, row.z & ma, row.phase));
        h.append_row(acol);
    }
    if (int(lp.xbar.size()) != k)
        throw std::logic_error("logical generation: harvested " +
                               std::to_string(lp.xbar.size()) + " logical X, expected " +
                               std::to_string(k));

    lp.zbar = fix_pairing(lp.zbar, lp.xbar);

    // The harvested rows commute as full 3n-qubit operators, but their A
    // restrictions need not: the A and B symplectic products cancel in pairs,
    // so two logical X candidates can anticommute with each other. Multiplying
    // by the paired logical Z flips exactly that one product and nothing else,
    // in the same spirit as the pairing repair above. Purely X-type sets (the
    // CSS case) already commute, so they are never touched.
    for (size_t j = 1; j < lp.xbar.size(); ++j)
        for (size_t i = 0; i < j; ++i)
            if (commutes(lp.xbar[i], lp.xbar[j]))
                lp.xbar[j] = multiply(lp.xbar[j], lp.zbar[i]);

    validate(c, lp);
    return lp;
}

void attach_logicals(stab_code& c) { c.logicals = generate_logicals(c); }

}  // namespace ghzdist
