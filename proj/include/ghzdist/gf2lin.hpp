#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ghzdist {

// Linear algebra over GF(2). Vectors are bit-packed into a single 64-bit
// word (bit i = coordinate i), which covers every register size used here.

struct bitvec {
    int n = 0;
    std::uint64_t bits = 0;

    bitvec() = default;
    bitvec(int n_, std::uint64_t bits_ = 0);

    int get(int i) const;
    void set(int i, int v);
    int popcount() const;
    int dot(const bitvec& o) const;  // parity of the bitwise AND
    bitvec operator^(const bitvec& o) const;
    bitvec& operator^=(const bitvec& o);
    bool operator==(const bitvec&) const = default;
    bool is_zero() const { return bits == 0; }
    std::string str() const;  // coordinate i printed at position i
};

bitvec concat(const bitvec& a, const bitvec& b);

struct bitmat {
    int rows = 0, cols = 0;
    std::vector<std::uint64_t> r;

    bitmat() = default;
    bitmat(int rows_, int cols_);
    static bitmat identity(int n);

    int get(int i, int j) const;
    void set(int i, int j, int v);
    bitvec row(int i) const;
    void set_row(int i, const bitvec& v);
    void append_row(const bitvec& v);
    bool operator==(const bitmat&) const = default;
    bool is_symmetric() const;
    bitmat transposed() const;
};

bitmat mul(const bitmat& a, const bitmat& b);
bitvec mul(const bitmat& a, const bitvec& x);  // A·x, x as a column
bitvec mul(const bitvec& x, const bitmat& a);  // x·A, x as a row

struct rref_result {
    bitmat reduced;
    std::vector<int> pivots;  // pivot column of each pivot row, increasing
    bitmat transform;         // transform · input = reduced
};
rref_result rref(const bitmat& m);
int rank(const bitmat& m);

struct solve_result {
    std::optional<bitvec> x;     // A·x = b when present
    std::vector<bitvec> kernel;  // basis of {v : A·v = 0}
};
solve_result solve(const bitmat& a, const bitvec& b);

// A·x = b for systems whose row count exceeds the 64-bit vector cap (at most
// 63 unknowns); free variables are zero.
std::optional<bitvec> solve_tall(const bitmat& a, const std::vector<int>& b);

// x·M = p for a row vector x; basis of {c : c·M = 0}; inverse of a square
// full-rank matrix.
std::optional<bitvec> solve_left(const bitmat& m, const bitvec& p);
std::vector<bitvec> left_kernel(const bitmat& m);
std::optional<bitmat> inverse(const bitmat& m);

// u = [a, b], v = [c, d] each of even length 2n: returns a·d + b·c mod 2.
int symplectic_product(const bitvec& u, const bitvec& v);

// W of size n²×n² with W·vec(Q) = vec(Q^T); vec is column-major.
bitmat vec_permutation(int n);
bitmat kron(const bitmat& a, const bitmat& b);
bitvec vec_of(const bitmat& m);
bitmat unvec(const bitvec& v, int rows, int cols);

}  // namespace ghzdist
