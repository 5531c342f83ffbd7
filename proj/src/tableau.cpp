#include "ghzdist/tableau.hpp"

#include <bit>
#include <memory>
#include <stdexcept>

namespace ghzdist {

outcome_source forced_outcomes(std::vector<int> bits) {
    auto cursor = std::make_shared<size_t>(0);
    return [bits = std::move(bits), cursor]() {
        if (*cursor >= bits.size()) throw std::logic_error("forced outcome list exhausted");
        return bits[(*cursor)++] & 1;
    };
}

tableau::tableau(int n_, std::vector<int> blocks_) : n(n_), blocks(std::move(blocks_)) {
    if (n_ < 1 || n_ > 32) throw std::invalid_argument("tableau qubit count must be in [1, 32]");
    if (blocks.empty()) blocks = {n};
    int total = 0;
    for (int b : blocks) total += b;
    if (total != n) throw std::invalid_argument("subsystem blocks must cover all qubits");
}

void tableau::append_row(const pauli& p) {
    if (p.n != n) throw std::invalid_argument("row qubit count mismatch");
    rows.push_back(p);
    if (paranoid) verify_invariants();
}

bitmat tableau::component_matrix() const {
    bitmat m(int(rows.size()), 2 * n);
    for (size_t i = 0; i < rows.size(); ++i) m.set_row(int(i), rows[i].symplectic());
    return m;
}

std::optional<int> tableau::deterministic_sign(const pauli& p) const {
    if (p.n != n) throw std::invalid_argument("qubit count mismatch");
    auto c = solve_left(component_matrix(), p.symplectic());
    if (!c) return std::nullopt;
    pauli prod = pauli::identity(n);
    for (size_t i = 0; i < rows.size(); ++i)
        if (c->get(int(i))) prod = multiply(prod, rows[i]);
    if (prod.x != p.x || prod.z != p.z) throw std::logic_error("row-space solve is inconsistent");
    int diff = (int(p.phase) - int(prod.phase) + 4) & 3;
    if (diff & 1) throw std::logic_error("non-Hermitian phase relation in deterministic_sign");
    return diff == 0 ? 1 : -1;
}

measure_result tableau::measure(const pauli& p, const outcome_source& outcome,
                                std::optional<int> replace_row) {
    if (p.n != n) throw std::invalid_argument("qubit count mismatch");
    if (!p.is_hermitian()) throw std::invalid_argument("measured operator must be Hermitian");

    std::vector<int> anti;
    for (size_t i = 0; i < rows.size(); ++i)
        if (commutes(rows[i], p)) anti.push_back(int(i));

    if (anti.empty()) {
        auto s = deterministic_sign(p);
        if (!s)
            throw std::logic_error(
                "operator commutes with all rows but is outside the row space");
        return {*s > 0 ? 0 : 1, true, -1};
    }

    int j = anti[0];
    if (replace_row) {
        bool ok = false;
        for (int i : anti) ok |= (i == *replace_row);
        if (!ok) throw std::invalid_argument("replacement override row does not anticommute");
        j = *replace_row;
    }

    int m = outcome() & 1;
    pauli old = rows[j];
    pauli fresh = p;
    fresh.phase = std::uint8_t((fresh.phase + 2 * m) & 3);
    rows[j] = fresh;
    for (int i : anti)
        if (i != j) rows[i] = multiply(rows[i], old);
    if (paranoid) verify_invariants();
    return {m, false, j};
}

void tableau::apply_error(const pauli& e) {
    if (e.n != n) throw std::invalid_argument("qubit count mismatch");
    for (pauli& row : rows)
        if (commutes(row, e)) row.phase = std::uint8_t((row.phase + 2) & 3);
    if (paranoid) verify_invariants();
}

void tableau::apply_diag_clifford(const bitmat& r, const std::vector<int>& qubits) {
    int s = int(qubits.size());
    if (r.rows != s || r.cols != s) throw std::invalid_argument("matrix size must match subset");
    if (!r.is_symmetric()) throw std::invalid_argument("diagonal Clifford matrix must be symmetric");
    for (int q : qubits)
        if (q < 0 || q >= n) throw std::invalid_argument("qubit subset out of range");

    for (pauli& row : rows) {
        bitvec a(s), b(s);
        for (int i = 0; i < s; ++i) {
            a.set(i, int((row.x >> qubits[i]) & 1));
            b.set(i, int((row.z >> qubits[i]) & 1));
        }
        bitvec t = mul(a, r);
        int flip = std::popcount(a.bits & b.bits & t.bits) & 1;
        // b updates mod 2, but the sign tracks the integer product a R: every
        // entry that wraps past 1 is a squared Z and flips the sign wherever
        // the row's X part also acts
        for (int i = 0; i < s; ++i)
            if (a.get(i)) flip ^= int(std::popcount(a.bits & r.row(i).bits) >> 1) & 1;
        row.phase = std::uint8_t((row.phase + 2 * flip) & 3);
        bitvec nb = b ^ t;
        for (int i = 0; i < s; ++i) {
            if (nb.get(i))
                row.z |= std::uint64_t{1} << qubits[i];
            else
                row.z &= ~(std::uint64_t{1} << qubits[i]);
        }
    }
    if (paranoid) verify_invariants();
}

void tableau::multiply_row(int i, int j) {
    if (i < 0 || j < 0 || i >= int(rows.size()) || j >= int(rows.size()) || i == j)
        throw std::invalid_argument("bad row pair");
    rows[i] = multiply(rows[i], rows[j]);
    if (paranoid) verify_invariants();
}

std::vector<int> tableau::row_signs() const {
    std::vector<int> s;
    s.reserve(rows.size());
    for (const pauli& row : rows) s.push_back(row.sign());
    return s;
}

std::string tableau::transcript() const {
    std::string out;
    for (const pauli& row : rows) {
        out += row.sign() > 0 ? "+1" : "-1";
        std::string xs, zs, ls;
        int off = 0;
        for (int b : blocks) {
            if (off) {
                xs += ' ';
                zs += ' ';
                ls += ' ';
            }
            for (int i = off; i < off + b; ++i) {
                int xb = int((row.x >> i) & 1), zb = int((row.z >> i) & 1);
                xs += char('0' + xb);
                zs += char('0' + zb);
                ls += xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
            }
            off += b;
        }
        out += '\t' + xs + '\t' + zs + '\t' + ls + '\n';
    }
    return out;
}

void tableau::verify_invariants() const {
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].n != n) throw std::logic_error("tableau row size corrupted");
        if (!rows[i].is_hermitian()) throw std::logic_error("tableau row phase is imaginary");
        for (size_t j = i + 1; j < rows.size(); ++j)
            if (commutes(rows[i], rows[j]))
                throw std::logic_error("tableau rows anticommute");
    }
    if (rank(component_matrix()) != int(rows.size()))
        throw std::logic_error("tableau rows are dependent");
}

tableau new_bell(int n) {
    tableau t(2 * n, {n, n});
    for (int i = 0; i < n; ++i) {
        pauli p(2 * n, 0, 0, 0);
        p.x = (std::uint64_t{1} << i) | (std::uint64_t{1} << (n + i));
        t.append_row(p);
    }
    for (int i = 0; i < n; ++i) {
        pauli p(2 * n, 0, 0, 0);
        p.z = (std::uint64_t{1} << i) | (std::uint64_t{1} << (n + i));
        t.append_row(p);
    }
    return t;
}

tableau new_ghz(int n, bool yyx_rewrite) {
    tableau t(3 * n, {n, n, n});
    for (int i = 0; i < n; ++i) {
        pauli p(3 * n, 0, 0, 0);
        p.z = (std::uint64_t{1} << i) | (std::uint64_t{1} << (n + i));
        t.append_row(p);
    }
    for (int i = 0; i < n; ++i) {
        pauli p(3 * n, 0, 0, 0);
        p.z = (std::uint64_t{1} << (n + i)) | (std::uint64_t{1} << (2 * n + i));
        t.append_row(p);
    }
    for (int i = 0; i < n; ++i) {
        std::uint64_t xa = std::uint64_t{1} << i;
        std::uint64_t xb = std::uint64_t{1} << (n + i);
        std::uint64_t xc = std::uint64_t{1} << (2 * n + i);
        pauli p(3 * n, xa | xb | xc, 0, 0);
        if (yyx_rewrite) {
            p.z = xa | xb;
            p.phase = 2;  // -Y_A Y_B X_C generates the same triple
        }
        t.append_row(p);
    }
    return t;
}

}  // namespace ghzdist
