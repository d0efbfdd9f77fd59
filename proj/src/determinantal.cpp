#include "persalg/determinantal.hpp"

#include <random>

namespace persalg {

DeterminantalIdeal determinantal_ideal(const RankLocus& locus) {
    DeterminantalIdeal out;
    out.ring = make_ring(locus.nrows * locus.ncols);
    out.generic = generic_matrix(out.ring, 0, locus.nrows, locus.ncols);
    if (locus.r < std::min(locus.nrows, locus.ncols))
        out.gens = minors_ideal(locus.r + 1, out.generic);
    return out;
}

std::vector<Polynomial> fitting_ideal(const Presentation& p, int j) {
    if (j < 0) throw std::invalid_argument("fitting_ideal: negative index");
    int size = p.generator_count() - j;
    const RingPtr& R = p.matrix.ring();
    if (size <= 0) return {Polynomial::constant(R, 1)};
    if (size > std::min(p.matrix.rows(), p.matrix.cols())) return {};
    return minors_ideal(size, p.matrix);
}

namespace {

// Fitt_j as an ideal, for j = 0 .. generator_count (beyond that they are all
// the unit ideal).
bool all_fittings_equal(const Presentation& a, const Presentation& b, MonomialOrder o) {
    int top = std::max(a.generator_count(), b.generator_count()) + 1;
    for (int j = 0; j <= top; ++j) {
        if (!ideal_equal(fitting_ideal(a, j), fitting_ideal(b, j), o)) return false;
    }
    return true;
}

}  // namespace

bool fitting_invariance_check(const Presentation& p, int trials, unsigned seed) {
    const RingPtr& R = p.matrix.ring();
    MonomialOrder o = R->order();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> scalar(-2, 2);
    std::uniform_int_distribution<int> vpick(0, R->nvars() - 1);

    // Padding with an identity summand: one extra generator, one extra
    // relation presenting it as zero.
    {
        PolyMatrix padded(R, p.matrix.rows() + 1, p.matrix.cols() + 1);
        for (int i = 0; i < p.matrix.rows(); ++i)
            for (int j = 0; j < p.matrix.cols(); ++j) padded.set(i, j, p.matrix.at(i, j));
        padded.set(p.matrix.rows(), p.matrix.cols(), Polynomial::constant(R, 1));
        if (!all_fittings_equal(p, Presentation{padded}, o)) return false;
    }

    for (int t = 0; t < trials; ++t) {
        PolyMatrix m = p.matrix;
        std::uniform_int_distribution<int> rowd(0, m.rows() - 1), cold(0, m.cols() - 1);
        std::uniform_int_distribution<int> opd(0, 3);
        for (int step = 0; step < 4; ++step) {
            switch (opd(rng)) {
                case 0: {  // swap two columns
                    int c1 = cold(rng), c2 = cold(rng);
                    if (c1 == c2) break;
                    for (int i = 0; i < m.rows(); ++i) {
                        Polynomial tmp = m.at(i, c1);
                        m.set(i, c1, m.at(i, c2));
                        m.set(i, c2, tmp);
                    }
                    break;
                }
                case 1: {  // add a polynomial multiple of one column to another
                    int c1 = cold(rng), c2 = cold(rng);
                    if (c1 == c2) break;
                    Polynomial f = Polynomial::variable(R, vpick(rng)).scaled(scalar(rng));
                    for (int i = 0; i < m.rows(); ++i)
                        m.set(i, c2, m.at(i, c2) + m.at(i, c1) * f);
                    break;
                }
                case 2: {  // add a polynomial multiple of one row to another
                    int r1 = rowd(rng), r2 = rowd(rng);
                    if (r1 == r2) break;
                    Polynomial f = Polynomial::variable(R, vpick(rng)).scaled(scalar(rng));
                    for (int jj = 0; jj < m.cols(); ++jj)
                        m.set(r2, jj, m.at(r2, jj) + m.at(r1, jj) * f);
                    break;
                }
                default: {  // flip the sign of a column (a unit scaling)
                    int c1 = cold(rng);
                    for (int i = 0; i < m.rows(); ++i) m.set(i, c1, -m.at(i, c1));
                    break;
                }
            }
        }
        if (!all_fittings_equal(p, Presentation{m}, o)) return false;
    }
    return true;
}

bool base_change_check(const Presentation& p, const RingPtr& target,
                       const std::vector<Polynomial>& images) {
    if (static_cast<int>(images.size()) != p.matrix.ring()->nvars())
        throw std::invalid_argument("base_change_check: arity mismatch");
    PolyMatrix substituted(target, p.matrix.rows(), p.matrix.cols());
    for (int i = 0; i < p.matrix.rows(); ++i)
        for (int j = 0; j < p.matrix.cols(); ++j)
            substituted.set(i, j, p.matrix.at(i, j).substitute(target, images));
    for (int j = 0; j <= p.generator_count() + 1; ++j) {
        auto lhs = fitting_ideal(p, j);
        auto rhs = fitting_ideal(Presentation{substituted}, j);
        if (lhs.size() != rhs.size()) return false;
        for (std::size_t k = 0; k < lhs.size(); ++k)
            if (!(lhs[k].substitute(target, images) == rhs[k])) return false;
    }
    return true;
}

}  // namespace persalg
