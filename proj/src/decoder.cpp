#include "ghzdist/decoder.hpp"

#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace ghzdist {

namespace {

// Visits every weight-w component pair (x, z) on n qubits, positions chosen
// in ascending order and each position cycling through X, Z, Y. Returns false
// when the visitor aborts the walk.
template <typename F>
bool walk_weight(int n, int w, int start, std::uint64_t x, std::uint64_t z, F& visit) {
    if (w == 0) return visit(x, z);
    for (int q = start; q <= n - w; ++q) {
        std::uint64_t bit = std::uint64_t{1} << q;
        if (!walk_weight(n, w - 1, q + 1, x | bit, z, visit)) return false;
        if (!walk_weight(n, w - 1, q + 1, x, z | bit, visit)) return false;
        if (!walk_weight(n, w - 1, q + 1, x | bit, z | bit, visit)) return false;
    }
    return true;
}

bool key_less(const pauli& p, const pauli& q) {
    return p.x != q.x ? p.x < q.x : p.z < q.z;
}

}  // namespace

syndrome_table build_table(const stab_code& c, std::optional<int> max_weight,
                           std::uint64_t budget) {
    if (c.r() > 24) throw std::invalid_argument("syndrome table needs more than 2^24 entries");
    if (max_weight && (*max_weight < 0 || *max_weight > c.n))
        throw std::invalid_argument("max_weight out of range");

    syndrome_table t;
    t.code = c;
    t.leaders.assign(std::size_t{1} << c.r(), std::nullopt);
    t.leaders[0] = pauli::identity(c.n);
    t.weight_reached = 0;

    std::uint64_t filled = 1, total = std::uint64_t{1} << c.r();
    std::uint64_t used = 0;
    bool budget_hit = false;
    int cap = max_weight ? *max_weight : c.n;

    for (int w = 1; w <= cap && filled < total && !budget_hit; ++w) {
        std::unordered_map<std::uint64_t, pauli> level;
        auto visit = [&](std::uint64_t x, std::uint64_t z) {
            if (++used > budget) {
                if (!max_weight) throw std::runtime_error("syndrome table enumeration budget exceeded");
                budget_hit = true;
                return false;
            }
            pauli e(c.n, x, z);
            std::uint64_t s = syndrome(c, e).bits;
            if (t.leaders[s]) return true;
            auto it = level.find(s);
            if (it == level.end())
                level.emplace(s, e);
            else if (key_less(e, it->second))
                it->second = e;
            return true;
        };
        bool full_level = walk_weight(c.n, w, 0, 0, 0, visit);
        // Ties within a weight level are settled before anything is stored, so
        // enumeration order never leaks into the table. A partial level from a
        // budget stop is discarded: committing it could crown the wrong leader.
        if (full_level) {
            for (auto& [s, e] : level) {
                t.leaders[s] = e;
                ++filled;
            }
            t.weight_reached = w;
        }
    }

    t.complete = filled == total;
    return t;
}

pauli decode(const syndrome_table& t, const bitvec& s) {
    if (s.n != t.code.r()) throw std::invalid_argument("syndrome length mismatch");
    const auto& leader = t.leaders[s.bits];
    if (!leader) throw std::runtime_error("no leader stored for syndrome " + s.str());
    return *leader;
}

int min_distance(const stab_code& c, std::uint64_t budget) {
    if (c.k == 0) throw std::invalid_argument("distance is undefined for a code with k = 0");
    std::uint64_t used = 0;
    for (int w = 1; w <= c.n; ++w) {
        bool found = false;
        auto visit = [&](std::uint64_t x, std::uint64_t z) {
            if (++used > budget) throw std::runtime_error("distance enumeration budget exceeded");
            pauli e(c.n, x, z);
            if (!syndrome(c, e).is_zero()) return true;
            if (group_sign(c.gens, e)) return true;
            found = true;
            return false;
        };
        walk_weight(c.n, w, 0, 0, 0, visit);
        if (found) return w;
    }
    throw std::logic_error("no logical operator found");  // unreachable for k >= 1
}

std::string dump_table(const syndrome_table& t) {
    std::string out;
    for (std::uint64_t s = 0; s < t.leaders.size(); ++s) {
        bitvec sv(t.code.r(), s);
        out += sv.str();
        out += '\t';
        out += t.leaders[s] ? format_pauli(*t.leaders[s]) : "?";
        out += '\n';
    }
    return out;
}

}  // namespace ghzdist
