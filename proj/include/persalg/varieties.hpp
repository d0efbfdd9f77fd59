#pragma once

#include "persalg/tableaux.hpp"

namespace persalg {

// Dimension vector d = (d_0, ..., d_N) with rank bounds r = (r_1, ..., r_N):
// level k hosts minors of the d_{k-1} x d_k matrix X_k of size at most r_k.
struct RankedFormat {
    std::vector<int> dims;
    std::vector<int> ranks;

    RankedFormat() = default;
    RankedFormat(std::vector<int> d, std::vector<int> r)
        : dims(std::move(d)), ranks(std::move(r)) {
        if (dims.size() < 2 || ranks.size() + 1 != dims.size())
            throw std::invalid_argument("RankedFormat: dims/ranks size mismatch");
        for (std::size_t k = 1; k < dims.size(); ++k) {
            if (dims[k] < 1) throw std::invalid_argument("RankedFormat: dimensions must be positive");
            if (ranks[k - 1] < 0 || ranks[k - 1] > std::min(dims[k - 1], dims[k]))
                throw std::invalid_argument("RankedFormat: rank out of range");
        }
    }
    int levels() const { return static_cast<int>(ranks.size()); }
    // r_k + r_{k+1} <= d_k at the interior modules.
    bool complex_compatible() const {
        for (int k = 1; k < levels(); ++k)
            if (ranks[k - 1] + ranks[k] > dims[k]) return false;
        return true;
    }
};

// Minor symbol <A|B>_k: rows A of X_k from [1, d_{k-1}], columns B from
// [1, d_k], |A| = |B| in [1, r_k].
struct MinorSymbol {
    int level = 1;
    std::vector<int> rows, cols;

    MinorSymbol() = default;
    MinorSymbol(int k, std::vector<int> a, std::vector<int> b)
        : level(k), rows(std::move(a)), cols(std::move(b)) {
        if (rows.size() != cols.size() || rows.empty())
            throw std::invalid_argument("MinorSymbol: need equal nonempty row/column sets");
    }
    int size() const { return static_cast<int>(rows.size()); }
    void validate(const RankedFormat& fmt) const;
    std::string to_string() const;
    bool operator==(const MinorSymbol& o) const {
        return level == o.level && rows == o.rows && cols == o.cols;
    }
};

// Subset order used throughout: {a_1<...<a_s} <= {b_1<...<b_t} iff s <= t and
// a_i >= b_i. Its linearization compares size first, then elementwise with
// the larger entry meaning the smaller set.
enum class PartialCmp { Less, Greater, Equal, Incomparable };
PartialCmp subset_partial_order(const std::vector<int>& a, const std::vector<int>& b);
int subset_total_order(const std::vector<int>& a, const std::vector<int>& b);  // -1/0/+1

int symbol_total_order(const MinorSymbol& a, const MinorSymbol& b);
PartialCmp symbol_partial_order(const MinorSymbol& a, const MinorSymbol& b);

// A monomial in the minor symbols, stored per level sorted descending in the
// total order.
struct SymbolMonomial {
    std::vector<std::vector<MinorSymbol>> per_level;  // index k-1

    SymbolMonomial() = default;
    explicit SymbolMonomial(int levels) : per_level(levels) {}
    static SymbolMonomial from_symbols(const RankedFormat& fmt,
                                       const std::vector<MinorSymbol>& symbols);

    bool empty() const {
        for (const auto& lv : per_level)
            if (!lv.empty()) return false;
        return true;
    }
    int degree() const {  // total polynomial degree: sum of minor sizes
        int d = 0;
        for (const auto& lv : per_level)
            for (const auto& s : lv) d += s.size();
        return d;
    }
    std::string to_string() const;
    static SymbolMonomial parse(const RankedFormat& fmt, const std::string& text);
    bool operator==(const SymbolMonomial& o) const;
};

// Monomial order on symbol monomials: the lexicographic product over levels
// of a reverse-lexicographic order on each level. Returns -1/0/+1.
int symbol_monomial_order(const SymbolMonomial& a, const SymbolMonomial& b);

// t(m): factor 0 is the stack of level-1 row sets; factor k pairs the
// reversed complements of the level-k column sets with the level-(k+1) row
// sets; the last factor drops columns equal to the full interval.
std::vector<Tableau> tableau_of(const SymbolMonomial& m, const RankedFormat& fmt);

enum class MonomialClass { Standard, NonstandardTableau, NonstandardVmax };
MonomialClass classify_monomial(const SymbolMonomial& m, const RankedFormat& fmt);
bool is_standard_monomial(const SymbolMonomial& m, const RankedFormat& fmt);
bool initial_ideal_member(const SymbolMonomial& m, const RankedFormat& fmt);

// Product of varieties: one monomial per color, each with its own format.
bool is_standard_multi(const std::vector<SymbolMonomial>& ms,
                       const std::vector<RankedFormat>& fmts);

// All symbols of the vertex set V(fmt), level by level, ascending.
std::vector<MinorSymbol> symbol_pool(const RankedFormat& fmt);

// All standard monomials of total polynomial degree d; throws when the
// enumeration exceeds the cap.
std::vector<SymbolMonomial> enumerate_standard(const RankedFormat& fmt, int degree,
                                               long cap = 2'000'000);

// Faces of the simplicial complex on V(fmt): squarefree standard products,
// up to the given cardinality.
std::vector<std::vector<MinorSymbol>> delta_complex_faces(const RankedFormat& fmt, int max_card,
                                                          long cap = 2'000'000);

// Componentwise comparison of rank sequences and their meet.
struct DegenerationCmp {
    PartialCmp cmp;
    std::vector<int> meet;
};
DegenerationCmp degeneration_order(const RankedFormat& a, const RankedFormat& b);

// All maximal rank sequences for a dimension vector: r_k <= min(d_{k-1}, d_k)
// and r_k + r_{k+1} <= d_k, maximal under the componentwise order.
std::vector<std::vector<int>> maximal_rank_sequences(const std::vector<int>& dims);

// Presentation of the coordinate ring of the rank-bounded variety of
// complexes: one generic matrix per level, the entries of consecutive
// products, and the size-r_k minors of each X_k.
struct ComplexVarietyIdeal {
    RingPtr ring;
    std::vector<PolyMatrix> mats;
    std::vector<Polynomial> gens;
};
ComplexVarietyIdeal coordinate_ring_ideal(const RankedFormat& fmt);

}  // namespace persalg
