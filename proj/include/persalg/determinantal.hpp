#pragma once

#include "persalg/groebner.hpp"
#include "persalg/polymatrix.hpp"

namespace persalg {

// Rank locus of generic nrows x ncols matrices of rank <= r.
struct RankLocus {
    int nrows, ncols, r;
    RankLocus(int m, int n, int rr) : nrows(m), ncols(n), r(rr) {
        if (r < 0 || r > std::min(nrows, ncols))
            throw std::invalid_argument("RankLocus: rank out of range");
    }
};

// Free presentation G <- F given by a matrix (rows = generators of G,
// columns = relations).
struct Presentation {
    PolyMatrix matrix;
    int generator_count() const { return matrix.rows(); }
};

// Defining ideal of the rank locus: the (r+1) x (r+1) minors of the generic
// matrix (empty when r is the full rank). The returned ring is fresh with
// nrows*ncols variables in column-major generic order.
struct DeterminantalIdeal {
    RingPtr ring;
    PolyMatrix generic;
    std::vector<Polynomial> gens;
};
DeterminantalIdeal determinantal_ideal(const RankLocus& locus);

// Fitting invariant generators Fitt_j = I_{r-j}(matrix): the unit ideal when
// r - j <= 0, the zero ideal (empty list) when r - j exceeds both dimensions.
std::vector<Polynomial> fitting_ideal(const Presentation& p, int j);

// Checks invariance of all Fitting ideals under re-presentation: padding by
// an identity summand and randomized invertible row/column operations.
// Requires exact ideal comparison, so the oracle runs over QQ (Integers
// domain) or ZZ/p.
bool fitting_invariance_check(const Presentation& p, int trials, unsigned seed = 20240901);

// Variable substitution into another ring commutes with forming Fitting
// ideals, generator by generator.
bool base_change_check(const Presentation& p, const RingPtr& target,
                       const std::vector<Polynomial>& images);

}  // namespace persalg
