#pragma once

#include <optional>

#include "persalg/linalg.hpp"
#include "persalg/polynomial.hpp"

namespace persalg {

// Sorted, strictly increasing 1-based index set.
struct SubsetIndex {
    std::vector<int> elems;

    SubsetIndex() = default;
    explicit SubsetIndex(std::vector<int> e) : elems(std::move(e)) {
        for (std::size_t i = 0; i + 1 < elems.size(); ++i)
            if (elems[i] >= elems[i + 1])
                throw std::invalid_argument("SubsetIndex: not strictly increasing");
        if (!elems.empty() && elems.front() < 1)
            throw std::invalid_argument("SubsetIndex: indices are 1-based");
    }
    std::size_t size() const { return elems.size(); }
    bool operator==(const SubsetIndex& o) const { return elems == o.elems; }
    bool operator<(const SubsetIndex& o) const { return elems < o.elems; }

    SubsetIndex complement(int ambient) const {
        std::vector<int> out;
        std::size_t k = 0;
        for (int i = 1; i <= ambient; ++i) {
            if (k < elems.size() && elems[k] == i) {
                ++k;
            } else {
                out.push_back(i);
            }
        }
        return SubsetIndex(std::move(out));
    }
};

// All k-subsets of [1..n] in colexicographic order: {1,2},{1,3},{2,3},{1,4},...
std::vector<SubsetIndex> subsets_colex(int n, int k);

// Sign of the permutation sorting the concatenation (A, B) of two disjoint
// sorted sets; 0 if they intersect.
int concat_sign(const std::vector<int>& a, const std::vector<int>& b);

// Dense matrix of polynomials with optional multigraded row/column shifts.
class PolyMatrix {
public:
    PolyMatrix() : rows_(0), cols_(0) {}
    PolyMatrix(RingPtr ring, int rows, int cols);

    static PolyMatrix identity(RingPtr ring, int n);
    static PolyMatrix from_entries(RingPtr ring, const std::vector<std::vector<Polynomial>>& rows);
    static PolyMatrix from_strings(RingPtr ring, const std::vector<std::vector<std::string>>& rows);

    const RingPtr& ring() const { return ring_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Polynomial& at(int r, int c) const { return entries_.at(idx(r, c)); }
    void set(int r, int c, Polynomial p);

    std::optional<std::vector<std::vector<int>>> row_shifts, col_shifts;

    PolyMatrix transpose() const;
    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-() const;
    bool operator==(const PolyMatrix& o) const;
    bool is_zero() const;
    PolyMatrix scaled(const Polynomial& f) const;

    // Submatrix by 1-based row/column index sets (in the given order).
    PolyMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
    Polynomial det() const;
    Polynomial minor_det(const SubsetIndex& rows, const SubsetIndex& cols) const;

    std::vector<std::vector<mpz_class>> evaluate(const std::vector<mpz_class>& point) const;

    // Macaulay2-style display: one "| a b |" line per row.
    std::string to_string() const;
    std::string to_json() const;
    static PolyMatrix from_json(const std::string& text);

private:
    RingPtr ring_;
    int rows_, cols_;
    std::vector<Polynomial> entries_;
    std::size_t idx(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw std::out_of_range("PolyMatrix: index out of range");
        return static_cast<std::size_t>(r) * cols_ + c;
    }
};

// Column-major fill with consecutive ring variables starting at start_var
// (0-based), the Macaulay2 genericMatrix convention.
PolyMatrix generic_matrix(const RingPtr& ring, int start_var, int nrows, int ncols);

// Matrix of k x k minors: rows/columns indexed by k-subsets in colex order.
PolyMatrix exterior_power(int k, const PolyMatrix& a);

// All r x r minors, row subsets outer / column subsets inner, colex order.
std::vector<Polynomial> minors_ideal(int r, const PolyMatrix& a);

// Largest r with a nonzero r x r minor.
int rank(const PolyMatrix& a);

}  // namespace persalg
