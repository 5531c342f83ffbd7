#include "ghzdist/stabcode.hpp"

#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace ghzdist {

namespace {

bitmat component_matrix(const std::vector<pauli>& gens) {
    if (gens.empty()) return bitmat(0, 0);
    bitmat m(0, 2 * gens[0].n);
    for (const auto& g : gens) m.append_row(g.symplectic());
    return m;
}

pauli subset_product(const std::vector<pauli>& gens, const bitvec& coeff) {
    pauli prod = pauli::identity(gens.at(0).n);
    for (int i = 0; i < coeff.n; ++i)
        if (coeff.get(i)) prod = multiply(prod, gens[size_t(i)]);
    return prod;
}

standard_form make_standard_form(const std::vector<pauli>& gens, int n) {
    standard_form sf;
    sf.h1 = bitmat(0, n);
    // Mixed block: keep original rows verbatim whenever the X part extends
    // the rank, so the common codes come out unchanged.
    for (const auto& g : gens) {
        bitvec xpart(n, g.x);
        if (xpart.is_zero()) continue;
        if (sf.h1.rows > 0 && solve_left(sf.h1, xpart).has_value()) continue;
        sf.h1.append_row(xpart);
        sf.gens.push_back(g);
    }
    sf.r_x = int(sf.gens.size());
    sf.h2 = bitmat(0, n);
    for (int i = 0; i < sf.r_x; ++i) sf.h2.append_row(bitvec(n, sf.gens[size_t(i)].z));

    // Pure-Z block: every coefficient vector killing the X parts yields a
    // purely Z-type element; exact products keep the signs right.
    bitmat xall(0, n);
    for (const auto& g : gens) xall.append_row(bitvec(n, g.x));
    sf.hz = bitmat(0, n);
    for (const auto& coeff : left_kernel(xall)) {
        pauli g = subset_product(gens, coeff);
        if (g.x != 0) throw std::logic_error("standard form: nonzero X part in Z block");
        sf.gens.push_back(g);
        sf.hz.append_row(bitvec(n, g.z));
    }
    sf.r_z = int(sf.gens.size()) - sf.r_x;
    return sf;
}

}  // namespace

std::optional<int> group_sign(const std::vector<pauli>& gens, const pauli& e) {
    if (gens.empty()) {
        if (e.x == 0 && e.z == 0) return e.sign();
        return std::nullopt;
    }
    auto coeff = solve_left(component_matrix(gens), e.symplectic());
    if (!coeff) return std::nullopt;
    pauli prod = subset_product(gens, *coeff);
    return prod.sign() * e.sign();
}

stab_code from_generators(std::vector<pauli> gens) {
    if (gens.empty()) throw std::invalid_argument("no generators");
    int n = gens[0].n;
    for (const auto& g : gens) {
        if (g.n != n) throw std::invalid_argument("generators act on different qubit counts");
        if (!g.is_hermitian()) throw std::invalid_argument("generator sign must be +1 or -1");
    }
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j)
            if (commutes(gens[i], gens[j]))
                throw std::invalid_argument("generators " + std::to_string(i) + " and " +
                                            std::to_string(j) + " anticommute");
    std::vector<pauli> seen;
    for (size_t i = 0; i < gens.size(); ++i) {
        auto s = group_sign(seen, gens[i]);
        if (s) {
            if (*s < 0)
                throw std::invalid_argument("generators put -I in the group (row " +
                                            std::to_string(i) + ")");
            throw std::invalid_argument("generator " + std::to_string(i) +
                                        " is dependent on earlier rows");
        }
        seen.push_back(gens[i]);
    }

    stab_code code;
    code.n = n;
    code.k = n - int(gens.size());
    code.gens = std::move(gens);
    code.sf = make_standard_form(code.gens, n);
    return code;
}

stab_code from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<pauli> gens;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t b = line.find_last_not_of(" \t\r");
        std::string tok = line.substr(a, b - a + 1);
        try {
            gens.push_back(parse_pauli(tok));
        } catch (const std::exception& e) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    try {
        return from_generators(std::move(gens));
    } catch (const std::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

stab_code five_qubit() {
    return from_generators({parse_pauli("+XZZXI"), parse_pauli("+IXZZX"), parse_pauli("+XIXZZ"),
                            parse_pauli("+ZXIXZ")});
}

stab_code bitflip3() {
    return from_generators({parse_pauli("+ZZI"), parse_pauli("+IZZ")});
}

stab_code yy3() {
    return from_generators({parse_pauli("+YYI"), parse_pauli("+IYY")});
}

stab_code steane() {
    return from_generators({parse_pauli("+IIIXXXX"), parse_pauli("+IXXIIXX"),
                            parse_pauli("+XIXIXIX"), parse_pauli("+IIIZZZZ"),
                            parse_pauli("+IZZIIZZ"), parse_pauli("+ZIZIZIZ")});
}

bitvec syndrome(const stab_code& c, const pauli& e) {
    if (e.n != c.n) throw std::invalid_argument("syndrome: size mismatch");
    bitvec s(c.r());
    for (int i = 0; i < c.r(); ++i) s.set(i, commutes(c.gens[size_t(i)], e));
    return s;
}

bool is_css(const stab_code& c) {
    bitmat xall(0, c.n), zall(0, c.n);
    for (const auto& g : c.gens) {
        xall.append_row(bitvec(c.n, g.x));
        zall.append_row(bitvec(c.n, g.z));
    }
    int pure_z = int(left_kernel(xall).size());
    int pure_x = int(left_kernel(zall).size());
    return pure_z + pure_x == c.r();
}

std::string to_json(const stab_code& c) {
    nlohmann::json j;
    j["n"] = c.n;
    j["k"] = c.k;
    j["r_x"] = c.sf.r_x;
    j["r_z"] = c.sf.r_z;
    j["generators"] = nlohmann::json::array();
    for (const auto& g : c.gens) j["generators"].push_back(format_pauli(g));
    if (c.logicals) {
        nlohmann::json l;
        l["zbar"] = nlohmann::json::array();
        l["xbar"] = nlohmann::json::array();
        for (const auto& p : c.logicals->zbar) l["zbar"].push_back(format_pauli(p));
        for (const auto& p : c.logicals->xbar) l["xbar"].push_back(format_pauli(p));
        j["logicals"] = l;
    }
    return j.dump(2);
}

}  // namespace ghzdist
