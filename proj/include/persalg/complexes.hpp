#pragma once

#include <map>

#include "persalg/polymatrix.hpp"

namespace persalg {

// Bounded complex of free modules R^{b_0} <- R^{b_1} <- ... <- R^{b_N},
// d[k-1] being the matrix of the map R^{b_k} -> R^{b_{k-1}}.
struct FreeComplex {
    RingPtr ring;
    std::vector<int> betti;
    std::vector<PolyMatrix> diff;

    FreeComplex() = default;
    FreeComplex(RingPtr r, std::vector<int> b, std::vector<PolyMatrix> d);

    int length() const { return static_cast<int>(betti.size()) - 1; }
    const PolyMatrix& d(int k) const { return diff.at(k - 1); }  // k = 1..N

    std::string to_json() const;
    static FreeComplex from_json(const std::string& text);
};

// r_k = sum_{j>=k} (-1)^{j-k} b_j for a resolution format; nullopt when some
// alternating sum goes negative. Computed by the backward recurrence
// r_N = b_N, r_k = b_k - r_{k+1}, which satisfies b_k = r_k + r_{k+1}.
std::optional<std::vector<int>> rank_conditions(const std::vector<int>& betti);

bool is_complex(const FreeComplex& c);

// Signals that a complex does not carry the claimed rank format (a failed
// exact division, a rank mismatch, or an inconsistent multiplier relation).
struct BeFormatError : std::runtime_error {
    explicit BeFormatError(const std::string& what) : std::runtime_error(what) {}
};

// Multipliers <A>_k for k = 1..N+1; level N+1 holds the empty-set unit.
// levels[k-1] maps the sorted row set A (|A| = r_k) to the multiplier.
struct MultiplierTable {
    std::vector<std::map<std::vector<int>, Polynomial>> levels;

    const Polynomial& at(int level, const std::vector<int>& key) const {
        return levels.at(level - 1).at(key);
    }
};

// Solves the factorization <A|E>_k = sgn(E^c, E) <A>_k <E^c>_{k+1} by exact
// division, seeding the last level with the maximal minors of d_N. Requires
// b_k = r_k + r_{k+1} (with r_{N+1} = 0) and rank(d_k) = r_k; violations and
// failed divisions raise BeFormatError.
MultiplierTable be_multipliers(const FreeComplex& c, const std::vector<int>& ranks);

// Verifies the factorization for every admissible pair (A, E) at all levels.
bool be_diagram_check(const FreeComplex& c, const std::vector<int>& ranks,
                      const MultiplierTable& table);

// Index data for the three quadratic multiplier identities. All sets are
// sorted 1-based lists; cardinality constraints are validated.
struct TchernevV1 {
    int level;                  // k
    std::vector<int> a, c, d;   // |a| = r_k - p, |c| = p + q >= r_k + 1, |d| = r_k - q
};
struct TchernevV2 {
    int level;
    std::vector<int> a, c, e;   // subsets of [b_{k-1}]
    std::vector<int> f;         // subset of [b_k], |f| = s, |e| = s - q
};
struct TchernevV3 {
    int level;
    std::vector<int> g;         // subset of [b_{k-1}], |g| = m <= r_k
    std::vector<int> h, kk, lambda;  // subsets of [b_k]
    int t;                      // |lambda| < t <= min(m, r_{k+1})
};

Polynomial tchernev_identity(const FreeComplex& c, const std::vector<int>& ranks,
                             const MultiplierTable& table, const TchernevV1& ix);
Polynomial tchernev_identity(const FreeComplex& c, const std::vector<int>& ranks,
                             const MultiplierTable& table, const TchernevV2& ix);
Polynomial tchernev_identity(const FreeComplex& c, const std::vector<int>& ranks,
                             const MultiplierTable& table, const TchernevV3& ix);

// Enumerates admissible index tuples of all three variants (bounded by
// max_instances per variant) and evaluates each; returns the number checked,
// throwing BeFormatError on the first nonzero value.
long tchernev_spot_check(const FreeComplex& c, const std::vector<int>& ranks,
                         const MultiplierTable& table, long max_instances);

// The base ring of the universal complex for a Betti format: one generic
// matrix Y^k per differential (column-major variables y_1, y_2, ...) and the
// ideal generated by the entries of the consecutive products Y^k Y^{k+1}.
struct GenericComplexRing {
    RingPtr ring;
    std::vector<PolyMatrix> mats;                       // b_{k-1} x b_k
    std::vector<std::vector<Polynomial>> product_blocks;  // entries of Y^k Y^{k+1}, row-major
    std::vector<Polynomial> all_generators() const;
};
GenericComplexRing generic_complex_ring(const std::vector<int>& betti);

// One homology-cycle elimination step: for a cycle at level k < N the columns
// of new indeterminates Z express it as a boundary; cycles at the last level
// contribute their coordinates directly.
struct ExactificationCycle {
    int level = 1;                   // k, 1-based
    std::vector<Polynomial> coords;  // length b_k
};
struct ExactificationStep {
    RingPtr extended_ring;            // original variables followed by the Z block
    std::vector<std::string> z_names;
    std::vector<Polynomial> generators;
};
ExactificationStep exactification_step(const GenericComplexRing& s0,
                                       const std::vector<ExactificationCycle>& cycles);

}  // namespace persalg
