#include "ghzdist/gf2lin.hpp"

#include <bit>
#include <stdexcept>

namespace ghzdist {

namespace {

void check_len(int n) {
    if (n < 0 || n > 64) throw std::invalid_argument("bit vector length must be in [0, 64]");
}

std::uint64_t mask_of(int n) {
    return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void check_same(int a, int b) {
    if (a != b) throw std::invalid_argument("length mismatch");
}

}  // namespace

bitvec::bitvec(int n_, std::uint64_t bits_) : n(n_), bits(bits_) {
    check_len(n_);
    bits &= mask_of(n_);
}

int bitvec::get(int i) const {
    if (i < 0 || i >= n) throw std::out_of_range("bit index");
    return int((bits >> i) & 1);
}

void bitvec::set(int i, int v) {
    if (i < 0 || i >= n) throw std::out_of_range("bit index");
    if (v & 1)
        bits |= std::uint64_t{1} << i;
    else
        bits &= ~(std::uint64_t{1} << i);
}

int bitvec::popcount() const { return std::popcount(bits); }

int bitvec::dot(const bitvec& o) const {
    check_same(n, o.n);
    return std::popcount(bits & o.bits) & 1;
}

bitvec bitvec::operator^(const bitvec& o) const {
    check_same(n, o.n);
    return bitvec(n, bits ^ o.bits);
}

bitvec& bitvec::operator^=(const bitvec& o) {
    check_same(n, o.n);
    bits ^= o.bits;
    return *this;
}

std::string bitvec::str() const {
    std::string s(n, '0');
    for (int i = 0; i < n; ++i)
        if ((bits >> i) & 1) s[i] = '1';
    return s;
}

bitvec concat(const bitvec& a, const bitvec& b) {
    check_len(a.n + b.n);
    return bitvec(a.n + b.n, a.bits | (b.bits << a.n));
}

bitmat::bitmat(int rows_, int cols_) : rows(rows_), cols(cols_), r(rows_, 0) {
    if (rows_ < 0) throw std::invalid_argument("negative row count");
    check_len(cols_);
}

bitmat bitmat::identity(int n) {
    bitmat m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

int bitmat::get(int i, int j) const {
    if (i < 0 || i >= rows || j < 0 || j >= cols) throw std::out_of_range("matrix index");
    return int((r[i] >> j) & 1);
}

void bitmat::set(int i, int j, int v) {
    if (i < 0 || i >= rows || j < 0 || j >= cols) throw std::out_of_range("matrix index");
    if (v & 1)
        r[i] |= std::uint64_t{1} << j;
    else
        r[i] &= ~(std::uint64_t{1} << j);
}

bitvec bitmat::row(int i) const {
    if (i < 0 || i >= rows) throw std::out_of_range("row index");
    return bitvec(cols, r[i]);
}

void bitmat::set_row(int i, const bitvec& v) {
    if (i < 0 || i >= rows) throw std::out_of_range("row index");
    check_same(v.n, cols);
    r[i] = v.bits;
}

void bitmat::append_row(const bitvec& v) {
    if (rows == 0 && cols == 0) cols = v.n;
    check_same(v.n, cols);
    r.push_back(v.bits);
    ++rows;
}

bool bitmat::is_symmetric() const {
    if (rows != cols) return false;
    for (int i = 0; i < rows; ++i)
        for (int j = i + 1; j < cols; ++j)
            if (get(i, j) != get(j, i)) return false;
    return true;
}

bitmat bitmat::transposed() const {
    bitmat t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (get(i, j)) t.set(j, i, 1);
    return t;
}

bitmat mul(const bitmat& a, const bitmat& b) {
    if (a.cols != b.rows) throw std::invalid_argument("dimension mismatch");
    bitmat c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i) {
        std::uint64_t acc = 0;
        std::uint64_t ar = a.r[i];
        int k = 0;
        while (ar) {
            if (ar & 1) acc ^= b.r[k];
            ar >>= 1;
            ++k;
        }
        c.r[i] = acc;
    }
    return c;
}

bitvec mul(const bitmat& a, const bitvec& x) {
    check_same(a.cols, x.n);
    bitvec y(a.rows);
    for (int i = 0; i < a.rows; ++i)
        if (std::popcount(a.r[i] & x.bits) & 1) y.bits |= std::uint64_t{1} << i;
    return y;
}

bitvec mul(const bitvec& x, const bitmat& a) {
    check_same(x.n, a.rows);
    std::uint64_t acc = 0;
    for (int i = 0; i < a.rows; ++i)
        if ((x.bits >> i) & 1) acc ^= a.r[i];
    return bitvec(a.cols, acc);
}

rref_result rref(const bitmat& m) {
    rref_result out{m, {}, bitmat::identity(m.rows)};
    bitmat& red = out.reduced;
    bitmat& t = out.transform;
    int rank_so_far = 0;
    for (int col = 0; col < m.cols && rank_so_far < m.rows; ++col) {
        int pivot = -1;
        for (int i = rank_so_far; i < m.rows; ++i)
            if (red.get(i, col)) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(red.r[pivot], red.r[rank_so_far]);
        std::swap(t.r[pivot], t.r[rank_so_far]);
        for (int i = 0; i < m.rows; ++i)
            if (i != rank_so_far && red.get(i, col)) {
                red.r[i] ^= red.r[rank_so_far];
                t.r[i] ^= t.r[rank_so_far];
            }
        out.pivots.push_back(col);
        ++rank_so_far;
    }
    return out;
}

int rank(const bitmat& m) { return int(rref(m).pivots.size()); }

solve_result solve(const bitmat& a, const bitvec& b) {
    check_same(b.n, a.rows);
    rref_result rr = rref(a);
    bitvec c = mul(rr.transform, b);
    int nr = int(rr.pivots.size());
    solve_result out;
    bool consistent = true;
    for (int i = nr; i < a.rows; ++i)
        if (c.get(i)) consistent = false;
    if (consistent) {
        bitvec x(a.cols);
        for (int i = 0; i < nr; ++i) x.set(rr.pivots[i], c.get(i));
        out.x = x;
    }
    std::vector<bool> is_pivot(a.cols, false);
    for (int p : rr.pivots) is_pivot[p] = true;
    for (int f = 0; f < a.cols; ++f) {
        if (is_pivot[f]) continue;
        bitvec v(a.cols);
        v.set(f, 1);
        for (int i = 0; i < nr; ++i) v.set(rr.pivots[i], rr.reduced.get(i, f));
        out.kernel.push_back(v);
    }
    return out;
}

std::optional<bitvec> solve_tall(const bitmat& a, const std::vector<int>& b) {
    if (int(b.size()) != a.rows) throw std::invalid_argument("right-hand side length mismatch");
    if (a.cols > 63) throw std::invalid_argument("solve_tall supports at most 63 unknowns");
    std::vector<std::uint64_t> rows(a.r);
    for (int i = 0; i < a.rows; ++i)
        if (b[size_t(i)] & 1) rows[size_t(i)] |= std::uint64_t{1} << a.cols;
    std::vector<int> pivots;
    int rank_so_far = 0;
    for (int col = 0; col <= a.cols && rank_so_far < a.rows; ++col) {
        int pivot = -1;
        for (int i = rank_so_far; i < a.rows; ++i)
            if ((rows[size_t(i)] >> col) & 1) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[size_t(pivot)], rows[size_t(rank_so_far)]);
        for (int i = 0; i < a.rows; ++i)
            if (i != rank_so_far && ((rows[size_t(i)] >> col) & 1))
                rows[size_t(i)] ^= rows[size_t(rank_so_far)];
        pivots.push_back(col);
        ++rank_so_far;
    }
    bitvec x(a.cols);
    for (int i = 0; i < rank_so_far; ++i) {
        if (pivots[size_t(i)] == a.cols) return std::nullopt;
        x.set(pivots[size_t(i)], int((rows[size_t(i)] >> a.cols) & 1));
    }
    return x;
}

std::optional<bitvec> solve_left(const bitmat& m, const bitvec& p) {
    return solve(m.transposed(), p).x;
}

std::vector<bitvec> left_kernel(const bitmat& m) {
    rref_result rr = rref(m);
    std::vector<bitvec> out;
    for (int i = int(rr.pivots.size()); i < m.rows; ++i) out.push_back(rr.transform.row(i));
    return out;
}

std::optional<bitmat> inverse(const bitmat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("inverse needs a square matrix");
    rref_result rr = rref(m);
    if (int(rr.pivots.size()) != m.rows) return std::nullopt;
    return rr.transform;
}

int symplectic_product(const bitvec& u, const bitvec& v) {
    check_same(u.n, v.n);
    if (u.n % 2) throw std::invalid_argument("symplectic product needs even length");
    int half = u.n / 2;
    std::uint64_t lo = mask_of(half);
    std::uint64_t a = u.bits & lo, b = u.bits >> half;
    std::uint64_t c = v.bits & lo, d = v.bits >> half;
    return int((std::popcount(a & d) ^ std::popcount(b & c)) & 1);
}

bitmat vec_permutation(int n) {
    if (n < 1) throw std::invalid_argument("vec_permutation needs n >= 1");
    bitmat w(n * n, n * n);
    for (int row_i = 0; row_i < n; ++row_i)
        for (int col_j = 0; col_j < n; ++col_j) w.set(col_j * n + row_i, row_i * n + col_j, 1);
    return w;
}

bitmat kron(const bitmat& a, const bitmat& b) {
    bitmat c(a.rows * b.rows, a.cols * b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) {
            if (!a.get(i, j)) continue;
            for (int k = 0; k < b.rows; ++k)
                for (int l = 0; l < b.cols; ++l)
                    if (b.get(k, l)) c.set(i * b.rows + k, j * b.cols + l, 1);
        }
    return c;
}

bitvec vec_of(const bitmat& m) {
    bitvec v(m.rows * m.cols);
    for (int j = 0; j < m.cols; ++j)
        for (int i = 0; i < m.rows; ++i) v.set(j * m.rows + i, m.get(i, j));
    return v;
}

bitmat unvec(const bitvec& v, int rows, int cols) {
    check_same(v.n, rows * cols);
    bitmat m(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) m.set(i, j, v.get(j * rows + i));
    return m;
}

}  // namespace ghzdist
