#pragma once

#include <map>

#include "persalg/polymatrix.hpp"

namespace persalg {

// Partition lambda = (lambda_1 >= ... >= lambda_s >= 1).
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && parts[i] > parts[i - 1])
                throw std::invalid_argument("Partition: parts must be non-increasing");
        }
    }
    int weight() const {
        int w = 0;
        for (int p : parts) w += p;
        return w;
    }
    std::size_t num_rows() const { return parts.size(); }
    bool operator==(const Partition& o) const { return parts == o.parts; }
};

// All partitions of weight m.
std::vector<Partition> partitions_of(int m);

// Filling of a Young diagram, stored row-wise. Entries are 1-based basis
// indices; rows may be unsorted (formal fillings) until canonicalized.
struct Tableau {
    std::vector<std::vector<int>> rows;

    Tableau() = default;
    explicit Tableau(std::vector<std::vector<int>> r) : rows(std::move(r)) {}

    std::vector<int> shape() const {
        std::vector<int> s;
        for (const auto& r : rows) s.push_back(static_cast<int>(r.size()));
        return s;
    }
    // Row lengths non-increasing (zero-length rows only at the end).
    bool valid_shape() const;
    bool operator==(const Tableau& o) const { return rows == o.rows; }
    bool operator<(const Tableau& o) const { return rows < o.rows; }

    // Text format: rows joined by '/'; entries compact digits when all < 10,
    // comma separated otherwise (e.g. 123/125 or 1,2,12/3,4).
    std::string to_string() const;
    static Tableau parse(const std::string& text);
};

// Standardness: rows strictly increasing, columns nondecreasing.
// Throws on a ragged (non-partition) filling.
bool is_standard(const Tableau& t);

// Pair of same-shape tableaux (s|t): row a of `left` lists the matrix rows
// and row a of `right` the matrix columns of a minor; the bitableau stands
// for the product of its row minors.
struct Bitableau {
    Tableau left, right;

    Bitableau() = default;
    Bitableau(Tableau l, Tableau r) : left(std::move(l)), right(std::move(r)) {
        if (left.shape() != right.shape())
            throw std::invalid_argument("Bitableau: shapes differ");
    }
    bool operator==(const Bitableau& o) const { return left == o.left && right == o.right; }
    bool operator<(const Bitableau& o) const {
        if (!(left == o.left)) return left < o.left;
        return right < o.right;
    }
    std::string to_string() const { return "(" + left.to_string() + " | " + right.to_string() + ")"; }
    static Bitableau parse(const std::string& text);
};

bool is_standard(const Bitableau& bt);

using TableauSum = std::map<Tableau, mpz_class>;
using BitableauSum = std::map<Bitableau, mpz_class>;

void add_to(TableauSum& sum, const Tableau& t, const mpz_class& c);
void add_to(BitableauSum& sum, const Bitableau& t, const mpz_class& c);

// Evaluation as products of minors of an integer matrix M.
// A tableau row (c_1, ..., c_k) is the minor on rows 1..k and the listed
// columns (in order, so transpositions flip sign and repeats vanish).
mpz_class eval_tableau(const Tableau& t, const Mat<mpz_class>& m);
mpz_class eval_tableau_sum(const TableauSum& s, const Mat<mpz_class>& m);
// A bitableau row pair (A_a | B_a) is the minor of M on rows A_a, columns B_a.
mpz_class eval_bitableau(const Bitableau& bt, const Mat<mpz_class>& m);
mpz_class eval_bitableau_sum(const BitableauSum& s, const Mat<mpz_class>& m);

// Input data for one shuffle map: rows a and a+1 of the diagram carry a fixed
// prefix (u entries of row a), a fixed suffix (v entries of row a+1) and a
// middle block that gets distributed over the remaining boxes of both rows.
struct ShuffleInput {
    Partition shape;
    int row_a = 1;                             // 1-based; pairs rows a, a+1
    std::vector<std::vector<int>> other_rows;  // fillings of the rows != a, a+1, top to bottom
    std::vector<int> prefix;                   // u entries
    std::vector<int> middle;                   // lambda_a - u + lambda_{a+1} - v entries
    std::vector<int> suffix;                   // v entries
};

// The signed sum of fillings in the image of the shuffle map; every such sum
// vanishes in the Schur module (and under eval_tableau on any matrix).
TableauSum shuffle_relation(const ShuffleInput& in);

// Number of standard tableaux of the given shape with entries in [1..n].
long schur_dimension(const Partition& shape, int n);

// Generating quadratic relations among maximal minors of an r x k matrix,
// as polynomials in one variable per r-subset (colex order).
struct PluckerRing {
    RingPtr ring;
    std::vector<SubsetIndex> subsets;  // colex; subsets[i] names variable i
};
PluckerRing plucker_ring(int r, int k);
std::vector<Polynomial> plucker_relations(int r, int k);

// Straightening: rewrites a formal sum of bitableaux (minors of a d1 x d2
// matrix) as an equal-evaluation sum of standard bitableaux. Works through
// the maximal minors of (X | Id), where the quadratic exchange applies.
BitableauSum straighten(const BitableauSum& input, int d1, int d2);
BitableauSum straighten(const Bitableau& bt, int d1, int d2);

}  // namespace persalg
