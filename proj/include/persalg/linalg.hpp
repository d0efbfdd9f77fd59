#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

namespace persalg {

// Dense exact linear algebra. Two coefficient fields are supported through
// the same template: rationals (FieldQ) and a prime field (FieldZp). Matrices
// are row-major vectors of vectors.

struct FieldQ {
    using Elem = mpq_class;
    static Elem zero() { return mpq_class(0); }
    static Elem one() { return mpq_class(1); }
    static bool is_zero(const Elem& a) { return a == 0; }
    static Elem add(const Elem& a, const Elem& b) { return a + b; }
    static Elem sub(const Elem& a, const Elem& b) { return a - b; }
    static Elem mul(const Elem& a, const Elem& b) { return a * b; }
    static Elem neg(const Elem& a) { return -a; }
    static Elem inv(const Elem& a) {
        if (a == 0) throw std::domain_error("FieldQ::inv: zero");
        return 1 / a;
    }
    static Elem from_int(const mpz_class& z) { return mpq_class(z); }
};

struct FieldZp {
    long p;
    using Elem = long;
    explicit FieldZp(long prime) : p(prime) {}
    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    bool is_zero(Elem a) const { return a % p == 0; }
    Elem add(Elem a, Elem b) const { return (a + b) % p; }
    Elem sub(Elem a, Elem b) const { return ((a - b) % p + p) % p; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>((static_cast<__int128>(a) * b) % p);
    }
    Elem neg(Elem a) const { return (p - a % p) % p; }
    Elem inv(Elem a) const {
        a = ((a % p) + p) % p;
        if (a == 0) throw std::domain_error("FieldZp::inv: zero");
        // Extended Euclid.
        long t = 0, new_t = 1, r = p, new_r = a;
        while (new_r != 0) {
            long q = r / new_r;
            long tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        return ((t % p) + p) % p;
    }
    Elem from_int(const mpz_class& z) const {
        mpz_class r = z % p;
        if (r < 0) r += p;
        return r.get_si();
    }
};

template <typename E>
using Mat = std::vector<std::vector<E>>;

// Row-reduces in place; returns the pivot column of each pivot row.
// Static-field version (FieldQ) and instance-field version (FieldZp) are
// unified by passing the field object.
template <typename F>
std::vector<int> row_echelon(const F& f, Mat<typename F::Elem>& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && f.is_zero(m[sel][c])) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        auto inv = f.inv(m[r][c]);
        for (std::size_t j = c; j < cols; ++j) m[r][j] = f.mul(m[r][j], inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || f.is_zero(m[i][c])) continue;
            auto factor = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] = f.sub(m[i][j], f.mul(factor, m[r][j]));
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

template <typename F>
std::size_t rank(const F& f, Mat<typename F::Elem> m) {
    return row_echelon(f, m).size();
}

// Kernel basis of the column-vector map x -> M x (columns = unknowns).
template <typename F>
Mat<typename F::Elem> kernel_basis(const F& f, Mat<typename F::Elem> m, std::size_t cols) {
    using E = typename F::Elem;
    std::vector<int> pivots = row_echelon(f, m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    Mat<E> basis;
    for (std::size_t freec = 0; freec < cols; ++freec) {
        if (is_pivot[freec]) continue;
        std::vector<E> v(cols, f.zero());
        v[freec] = f.one();
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            // pivot row r has 1 at column pivots[r]
            v[pivots[r]] = f.neg(m[r][freec]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Determinant of a square integer matrix, Bareiss fraction-free elimination.
mpz_class det_bareiss(Mat<mpz_class> m);

// Rank of an integer matrix (over QQ).
std::size_t rank_integer(const Mat<mpz_class>& m);

// Smith normal form diagonal of an integer matrix (nonzero invariant factors).
std::vector<mpz_class> smith_invariants(Mat<mpz_class> m);

}  // namespace persalg
