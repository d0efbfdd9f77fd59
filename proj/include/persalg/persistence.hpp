#pragma once

#include <array>
#include <set>

#include "persalg/polymatrix.hpp"

namespace persalg {

using Grade = std::vector<int>;

inline bool grade_leq(const Grade& a, const Grade& b) {
    if (a.size() != b.size()) throw std::invalid_argument("grade_leq: arity mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// Free multigraded module: distinct grades with multiplicities.
struct GradedFreeModule {
    int nvars = 0;
    std::vector<std::pair<Grade, int>> summands;

    int total_rank() const {
        int r = 0;
        for (const auto& [g, m] : summands) r += m;
        return r;
    }
    // One grade per basis element, in summand order.
    std::vector<Grade> basis_grades() const {
        std::vector<Grade> out;
        for (const auto& [g, m] : summands)
            for (int i = 0; i < m; ++i) out.push_back(g);
        return out;
    }
    void validate() const;
};

// Homogeneous map between free multigraded modules; entry (j, i) must be a
// scalar multiple of x^{u(i) - v(j)} for source grade u(i), target grade v(j).
struct GradedMap {
    GradedFreeModule source, target;
    PolyMatrix mat;  // target.total_rank() x source.total_rank()
};

bool graded_map_check(const GradedMap& f);

// Minimal generator grades of coker(f), computed gradewise over the box
// [0, grid] by exact elimination (over QQ when prime == 0, else ZZ/prime).
// The grid must dominate every shift of f, otherwise the module is not
// settled and an error is raised.
std::vector<std::pair<Grade, int>> top_of_cokernel(const GradedMap& f, const Grade& grid,
                                                   long prime = 0);

GradedFreeModule projective_cover(const std::vector<std::pair<Grade, int>>& top, int nvars);

// ---------------------------------------------------------------------------
// Bifiltrations of simplicial complexes (entry grades in N^2).
// ---------------------------------------------------------------------------

struct Simplex {
    std::vector<int> verts;  // sorted vertex ids
    std::array<int, 2> grade{0, 0};
};

struct Bifiltration {
    std::vector<Simplex> simplices;
    std::array<int, 2> grid{0, 0};  // inclusive componentwise bound

    void validate() const;  // faces present, grades monotone, within grid
    std::string to_json() const;
    static Bifiltration from_json(const std::string& text);
};

// Time-indexed weighted graph snapshot.
struct GraphSnapshot {
    struct Edge {
        int a, b;
        double weight;
    };
    int time = 0;
    std::vector<int> vertices;
    std::vector<Edge> edges;
};

std::vector<GraphSnapshot> parse_snapshots_json(const std::string& text);

struct FlagBuildResult {
    Bifiltration bifiltration;
    // Edges whose interaction strength later exceeded the level at first
    // entry; their strengthening is ignored to keep one entry grade each.
    std::vector<std::string> flags;
};

// Clique bifiltration of a time-varying weighted graph. Axis 0 is the
// snapshot index; axis 1 is the threshold index into `thresholds`, which must
// be strictly decreasing (stronger coupling enters earlier). Cliques are
// filled up to dimension `max_dim`.
FlagBuildResult flag_bifiltration(const std::vector<GraphSnapshot>& snapshots,
                                  const std::vector<double>& thresholds, int max_dim = 3);

// Rank of H_i(X_u) -> H_i(X_v) over QQ (prime == 0) or ZZ/prime.
long rank_invariant(const Bifiltration& b, int i, const std::array<int, 2>& u,
                    const std::array<int, 2>& v, long prime = 0);

// Gradewise homology dimension dim H_i(X_u).
long homology_dimension(const Bifiltration& b, int i, const std::array<int, 2>& u,
                        long prime = 0);

// Integral homology of one slice: Betti number and torsion invariants.
struct IntegralHomology {
    long betti = 0;
    std::vector<mpz_class> torsion;  // invariant factors > 1
};
IntegralHomology integral_homology(const Bifiltration& b, int i, const std::array<int, 2>& u);

// Minimal presentation of the degree-i persistent homology of a bifiltration:
// minimal generators and minimal relations assembled into a homogeneous map
// over K[x, y], with gradewise cokernel dimensions audited against H_i.
struct HomologyPresentation {
    GradedMap map;                     // relations -> generators
    std::vector<std::pair<Grade, int>> generators;
    std::vector<std::pair<Grade, int>> relations;
};
HomologyPresentation presentation_of_homology(const Bifiltration& b, int i, long prime = 0);

}  // namespace persalg
