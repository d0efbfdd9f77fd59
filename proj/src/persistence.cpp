#include "persalg/persistence.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>

#include "persalg/linalg.hpp"

namespace persalg {

using json = nlohmann::json;

void GradedFreeModule::validate() const {
    std::set<Grade> seen;
    for (const auto& [g, m] : summands) {
        if (static_cast<int>(g.size()) != nvars)
            throw std::invalid_argument("GradedFreeModule: grade arity mismatch");
        if (m < 1) throw std::invalid_argument("GradedFreeModule: multiplicities are positive");
        for (int v : g)
            if (v < 0) throw std::invalid_argument("GradedFreeModule: grades live in N^n");
        if (!seen.insert(g).second)
            throw std::invalid_argument("GradedFreeModule: duplicate grade in summand list");
    }
}

bool graded_map_check(const GradedMap& f) {
    f.source.validate();
    f.target.validate();
    auto src = f.source.basis_grades();
    auto tgt = f.target.basis_grades();
    if (f.mat.rows() != static_cast<int>(tgt.size()) ||
        f.mat.cols() != static_cast<int>(src.size()))
        throw std::invalid_argument("graded_map_check: matrix shape mismatch");
    for (int j = 0; j < f.mat.rows(); ++j) {
        for (int i = 0; i < f.mat.cols(); ++i) {
            const Polynomial& e = f.mat.at(j, i);
            if (e.is_zero()) continue;
            if (e.num_terms() != 1) return false;
            const auto& mono = e.leading_term().mono;
            for (int v = 0; v < f.mat.ring()->nvars(); ++v)
                if (mono.exps[v] != src[i][v] - tgt[j][v]) return false;
        }
    }
    return true;
}

namespace {

// Enumerates the box [0, grid] in an order compatible with the grade order.
std::vector<Grade> box_points(const Grade& grid) {
    std::vector<Grade> out;
    Grade cur(grid.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == grid.size()) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= grid[i]; ++v) {
            cur[i] = v;
            rec(i + 1);
        }
        cur[i] = 0;
    };
    rec(0);
    std::sort(out.begin(), out.end(), [](const Grade& a, const Grade& b) {
        int sa = 0, sb = 0;
        for (int v : a) sa += v;
        for (int v : b) sb += v;
        if (sa != sb) return sa < sb;
        return a < b;
    });
    return out;
}

template <typename F>
long rank_of_rows(const F& f, Mat<typename F::Elem> rows) {
    if (rows.empty()) return 0;
    return static_cast<long>(rank(f, std::move(rows)));
}

template <typename F>
std::vector<std::pair<Grade, int>> top_impl(const F& f, const GradedMap& g, const Grade& grid) {
    auto src = g.source.basis_grades();
    auto tgt = g.target.basis_grades();
    for (const auto& grade : src)
        if (!grade_leq(grade, grid))
            throw std::invalid_argument("top_of_cokernel: grid too small, module not settled");
    for (const auto& grade : tgt)
        if (!grade_leq(grade, grid))
            throw std::invalid_argument("top_of_cokernel: grid too small, module not settled");

    using E = typename F::Elem;
    // Coefficient of each homogeneous entry.
    Mat<E> coeff(tgt.size(), std::vector<E>(src.size(), f.zero()));
    for (std::size_t j = 0; j < tgt.size(); ++j)
        for (std::size_t i = 0; i < src.size(); ++i) {
            const Polynomial& e = g.mat.at(static_cast<int>(j), static_cast<int>(i));
            if (!e.is_zero()) coeff[j][i] = f.from_int(e.leading_term().coeff);
        }

    std::vector<std::pair<Grade, int>> top;
    for (const auto& u : box_points(grid)) {
        std::vector<int> rows_present, cols_present;
        for (std::size_t j = 0; j < tgt.size(); ++j)
            if (grade_leq(tgt[j], u)) rows_present.push_back(static_cast<int>(j));
        if (rows_present.empty()) continue;
        for (std::size_t i = 0; i < src.size(); ++i)
            if (grade_leq(src[i], u)) cols_present.push_back(static_cast<int>(i));
        // Image columns plus the unit columns of generators older than u.
        Mat<E> m;
        for (int i : cols_present) {
            std::vector<E> col;
            for (int j : rows_present) col.push_back(coeff[j][i]);
            m.push_back(std::move(col));
        }
        long rank_image = rank_of_rows(f, m);
        for (std::size_t jj = 0; jj < rows_present.size(); ++jj) {
            if (tgt[rows_present[jj]] == u) continue;
            std::vector<E> unit(rows_present.size(), f.zero());
            unit[jj] = f.one();
            m.push_back(std::move(unit));
        }
        long rank_all = rank_of_rows(f, m);
        (void)rank_image;
        int mult = static_cast<int>(rows_present.size()) - static_cast<int>(rank_all);
        if (mult > 0) top.emplace_back(u, mult);
    }
    return top;
}

}  // namespace

std::vector<std::pair<Grade, int>> top_of_cokernel(const GradedMap& f, const Grade& grid,
                                                   long prime) {
    if (!graded_map_check(f))
        throw std::invalid_argument("top_of_cokernel: map is not homogeneous");
    if (prime == 0) return top_impl(FieldQ{}, f, grid);
    return top_impl(FieldZp(prime), f, grid);
}

GradedFreeModule projective_cover(const std::vector<std::pair<Grade, int>>& top, int nvars) {
    GradedFreeModule out;
    out.nvars = nvars;
    out.summands = top;
    out.validate();
    return out;
}

// ---------------------------------------------------------------------------
// Bifiltrations.
// ---------------------------------------------------------------------------

void Bifiltration::validate() const {
    std::map<std::vector<int>, std::array<int, 2>> grades;
    for (const auto& s : simplices) {
        if (s.verts.empty()) throw std::invalid_argument("Bifiltration: empty simplex");
        for (std::size_t i = 0; i + 1 < s.verts.size(); ++i)
            if (s.verts[i] >= s.verts[i + 1])
                throw std::invalid_argument("Bifiltration: vertices must be sorted and distinct");
        if (s.grade[0] < 0 || s.grade[1] < 0 || s.grade[0] > grid[0] || s.grade[1] > grid[1])
            throw std::invalid_argument("Bifiltration: grade outside the grid");
        if (grades.count(s.verts)) throw std::invalid_argument("Bifiltration: duplicate simplex");
        grades[s.verts] = s.grade;
    }
    for (const auto& s : simplices) {
        if (s.verts.size() == 1) continue;
        for (std::size_t drop = 0; drop < s.verts.size(); ++drop) {
            std::vector<int> face;
            for (std::size_t i = 0; i < s.verts.size(); ++i)
                if (i != drop) face.push_back(s.verts[i]);
            auto it = grades.find(face);
            if (it == grades.end())
                throw std::invalid_argument("Bifiltration: missing face of a simplex");
            if (it->second[0] > s.grade[0] || it->second[1] > s.grade[1])
                throw std::invalid_argument("Bifiltration: non-monotone entry grades");
        }
    }
}

std::string Bifiltration::to_json() const {
    json j;
    j["grid"] = grid;
    json arr = json::array();
    for (const auto& s : simplices) {
        json e;
        e["verts"] = s.verts;
        e["grade"] = s.grade;
        arr.push_back(e);
    }
    j["simplices"] = arr;
    return j.dump(2);
}

Bifiltration Bifiltration::from_json(const std::string& text) {
    json j = json::parse(text);
    Bifiltration b;
    b.grid = j.at("grid").get<std::array<int, 2>>();
    for (const auto& e : j.at("simplices")) {
        Simplex s;
        s.verts = e.at("verts").get<std::vector<int>>();
        s.grade = e.at("grade").get<std::array<int, 2>>();
        b.simplices.push_back(std::move(s));
    }
    b.validate();
    return b;
}

std::vector<GraphSnapshot> parse_snapshots_json(const std::string& text) {
    json j = json::parse(text);
    std::vector<GraphSnapshot> out;
    for (const auto& e : j) {
        GraphSnapshot s;
        s.time = e.at("time").get<int>();
        if (e.contains("vertices")) s.vertices = e["vertices"].get<std::vector<int>>();
        if (e.contains("edges")) {
            for (const auto& ed : e["edges"]) {
                GraphSnapshot::Edge edge;
                edge.a = ed.at("a").get<int>();
                edge.b = ed.at("b").get<int>();
                edge.weight = ed.at("weight").get<double>();
                s.edges.push_back(edge);
            }
        }
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(),
              [](const GraphSnapshot& a, const GraphSnapshot& b) { return a.time < b.time; });
    return out;
}

FlagBuildResult flag_bifiltration(const std::vector<GraphSnapshot>& snapshots,
                                  const std::vector<double>& thresholds, int max_dim) {
    if (snapshots.empty()) throw std::invalid_argument("flag_bifiltration: no snapshots");
    if (thresholds.empty()) throw std::invalid_argument("flag_bifiltration: no thresholds");
    for (std::size_t i = 0; i + 1 < thresholds.size(); ++i)
        if (thresholds[i] <= thresholds[i + 1])
            throw std::invalid_argument(
                "flag_bifiltration: thresholds must be strictly decreasing");
    int T = static_cast<int>(snapshots.size());
    int S = static_cast<int>(thresholds.size());

    FlagBuildResult out;
    out.bifiltration.grid = {T - 1, S - 1};

    // Vertex first-appearance times.
    std::map<int, int> vertex_time;
    auto touch_vertex = [&](int v, int t) {
        auto it = vertex_time.find(v);
        if (it == vertex_time.end()) {
            vertex_time[v] = t;
        } else {
            it->second = std::min(it->second, t);
        }
    };
    for (int t = 0; t < T; ++t) {
        for (int v : snapshots[t].vertices) touch_vertex(v, t);
        for (const auto& e : snapshots[t].edges) {
            touch_vertex(e.a, t);
            touch_vertex(e.b, t);
        }
    }

    auto level_of = [&](double w) {  // smallest index whose threshold w meets; S if none
        for (int s = 0; s < S; ++s)
            if (w >= thresholds[s]) return s;
        return S;
    };

    // One entry grade per edge: the first snapshot where the running-maximum
    // weight meets the weakest threshold, at the level it holds there. Later
    // strengthening would need a second incomparable entry grade; it is
    // ignored and flagged.
    std::map<std::pair<int, int>, std::array<int, 2>> edge_grade;
    std::map<std::pair<int, int>, double> running;
    std::map<std::pair<int, int>, int> entry_level;
    for (int t = 0; t < T; ++t) {
        for (const auto& e : snapshots[t].edges) {
            auto key = std::minmax(e.a, e.b);
            auto it = running.find(key);
            double w = e.weight;
            if (it != running.end()) w = std::max(w, it->second);
            running[key] = w;
            int lvl = level_of(w);
            if (!edge_grade.count(key)) {
                if (lvl < S) {
                    edge_grade[key] = {t, lvl};
                    entry_level[key] = lvl;
                }
            } else if (lvl < entry_level[key]) {
                std::ostringstream msg;
                msg << "edge (" << key.first << "," << key.second
                    << ") strengthened to level " << lvl << " at time " << t
                    << " after entering at level " << entry_level[key]
                    << "; strengthening ignored";
                out.flags.push_back(msg.str());
                entry_level[key] = lvl;  // flag once per improvement
            }
        }
    }

    auto& simplices = out.bifiltration.simplices;
    for (const auto& [v, t] : vertex_time) {
        Simplex s;
        s.verts = {v};
        s.grade = {t, 0};
        simplices.push_back(std::move(s));
    }
    // Adjacency among entered edges.
    std::vector<int> vert_ids;
    for (const auto& [v, t] : vertex_time) vert_ids.push_back(v);
    auto grade_of_edge = [&](int a, int b) -> const std::array<int, 2>* {
        auto it = edge_grade.find(std::minmax(a, b));
        return it == edge_grade.end() ? nullptr : &it->second;
    };
    // Cliques up to max_dim, entry grade = componentwise max of member edges.
    std::vector<std::vector<int>> cliques;
    std::function<void(std::vector<int>&, std::size_t)> extend = [&](std::vector<int>& cur,
                                                                     std::size_t start) {
        if (cur.size() >= 2) cliques.push_back(cur);
        if (static_cast<int>(cur.size()) == max_dim + 1) return;
        for (std::size_t i = start; i < vert_ids.size(); ++i) {
            int cand = vert_ids[i];
            bool ok = true;
            for (int v : cur)
                if (!grade_of_edge(v, cand)) ok = false;
            if (!ok) continue;
            cur.push_back(cand);
            extend(cur, i + 1);
            cur.pop_back();
        }
    };
    std::vector<int> cur;
    for (std::size_t i = 0; i < vert_ids.size(); ++i) {
        cur.push_back(vert_ids[i]);
        extend(cur, i + 1);
        cur.pop_back();
    }
    for (const auto& cl : cliques) {
        std::array<int, 2> g{0, 0};
        for (std::size_t i = 0; i < cl.size(); ++i)
            for (std::size_t j = i + 1; j < cl.size(); ++j) {
                const auto* eg = grade_of_edge(cl[i], cl[j]);
                g[0] = std::max(g[0], (*eg)[0]);
                g[1] = std::max(g[1], (*eg)[1]);
            }
        for (int v : cl) g[0] = std::max(g[0], vertex_time[v]);
        Simplex s;
        s.verts = cl;
        s.grade = g;
        simplices.push_back(std::move(s));
    }
    std::sort(simplices.begin(), simplices.end(), [](const Simplex& a, const Simplex& b) {
        if (a.verts.size() != b.verts.size()) return a.verts.size() < b.verts.size();
        return a.verts < b.verts;
    });
    out.bifiltration.validate();
    return out;
}

// ---------------------------------------------------------------------------
// Simplicial homology over a field.
// ---------------------------------------------------------------------------

namespace {

struct ChainData {
    // Simplices grouped by dimension, each with its entry grade.
    std::vector<std::vector<const Simplex*>> by_dim;
    std::map<std::vector<int>, int> position;  // verts -> index within its dimension

    explicit ChainData(const Bifiltration& b) {
        b.validate();
        for (const auto& s : b.simplices) {
            std::size_t d = s.verts.size() - 1;
            if (by_dim.size() <= d) by_dim.resize(d + 1);
            by_dim[d].push_back(&s);
        }
        for (auto& dim : by_dim)
            std::sort(dim.begin(), dim.end(),
                      [](const Simplex* a, const Simplex* b) { return a->verts < b->verts; });
        for (std::size_t d = 0; d < by_dim.size(); ++d)
            for (std::size_t i = 0; i < by_dim[d].size(); ++i)
                position[by_dim[d][i]->verts] = static_cast<int>(i);
    }

    int count(int dim) const {
        return dim >= 0 && dim < static_cast<int>(by_dim.size())
                   ? static_cast<int>(by_dim[dim].size())
                   : 0;
    }
    bool present(const Simplex& s, const std::array<int, 2>& u) const {
        return s.grade[0] <= u[0] && s.grade[1] <= u[1];
    }
};

template <typename F>
struct Homology {
    using E = typename F::Elem;
    const F& f;
    const ChainData& data;

    Homology(const F& field, const ChainData& cd) : f(field), data(cd) {}

    // Signed boundary of one simplex as a global (dim-1)-chain vector.
    std::vector<E> boundary_vector(const Simplex& s) const {
        std::vector<E> out(data.count(static_cast<int>(s.verts.size()) - 2), f.zero());
        if (s.verts.size() == 1) return out;  // vertices have empty boundary
        for (std::size_t drop = 0; drop < s.verts.size(); ++drop) {
            std::vector<int> face;
            for (std::size_t i = 0; i < s.verts.size(); ++i)
                if (i != drop) face.push_back(s.verts[i]);
            int idx = data.position.at(face);
            out[idx] = (drop % 2 == 0) ? f.one() : f.neg(f.one());
        }
        return out;
    }

    // Kernel of the boundary map on i-chains of X_u, as global i-chain vectors.
    Mat<E> cycle_basis(int i, const std::array<int, 2>& u) const {
        std::vector<int> cols;
        for (int c = 0; c < data.count(i); ++c)
            if (data.present(*data.by_dim[i][c], u)) cols.push_back(c);
        if (cols.empty()) return {};
        if (i == 0) {
            Mat<E> out;
            for (int c : cols) {
                std::vector<E> v(data.count(0), f.zero());
                v[c] = f.one();
                out.push_back(std::move(v));
            }
            return out;
        }
        // Matrix of the restricted boundary: rows = (i-1)-simplices.
        Mat<E> m(data.count(i - 1), std::vector<E>(cols.size(), f.zero()));
        for (std::size_t cc = 0; cc < cols.size(); ++cc) {
            auto bv = boundary_vector(*data.by_dim[i][cols[cc]]);
            for (int r = 0; r < data.count(i - 1); ++r) m[r][cc] = bv[r];
        }
        Mat<E> ker = kernel_basis(f, std::move(m), cols.size());
        Mat<E> out;
        for (const auto& kv : ker) {
            std::vector<E> v(data.count(i), f.zero());
            for (std::size_t cc = 0; cc < cols.size(); ++cc) v[cols[cc]] = kv[cc];
            out.push_back(std::move(v));
        }
        return out;
    }

    // Boundaries of the (i+1)-simplices of X_v, as global i-chain vectors.
    Mat<E> boundary_columns(int i, const std::array<int, 2>& v) const {
        Mat<E> out;
        for (int c = 0; c < data.count(i + 1); ++c) {
            const Simplex& s = *data.by_dim[i + 1][c];
            if (!data.present(s, v)) continue;
            out.push_back(boundary_vector(s));
        }
        return out;
    }

    long rank_vectors(Mat<E> rows) const { return rank_of_rows(f, std::move(rows)); }
};

template <typename F>
long rank_invariant_impl(const F& f, const ChainData& data, int i, const std::array<int, 2>& u,
                         const std::array<int, 2>& v) {
    Homology<F> H(f, data);
    auto Z = H.cycle_basis(i, u);
    if (Z.empty()) return 0;
    auto B = H.boundary_columns(i, v);
    long rank_b = H.rank_vectors(B);
    Mat<typename F::Elem> all = B;
    for (const auto& z : Z) all.push_back(z);
    long rank_all = H.rank_vectors(std::move(all));
    // dim Z - dim(Z cap B) = rank [Z|B] - rank B.
    return rank_all - rank_b;
}

}  // namespace

long rank_invariant(const Bifiltration& b, int i, const std::array<int, 2>& u,
                    const std::array<int, 2>& v, long prime) {
    if (i < 0) throw std::invalid_argument("rank_invariant: negative degree");
    if (u[0] > v[0] || u[1] > v[1])
        throw std::invalid_argument("rank_invariant: grades must satisfy u <= v");
    ChainData data(b);
    if (prime == 0) return rank_invariant_impl(FieldQ{}, data, i, u, v);
    return rank_invariant_impl(FieldZp(prime), data, i, u, v);
}

long homology_dimension(const Bifiltration& b, int i, const std::array<int, 2>& u, long prime) {
    return rank_invariant(b, i, u, u, prime);
}

IntegralHomology integral_homology(const Bifiltration& b, int i, const std::array<int, 2>& u) {
    ChainData data(b);
    // Integer boundary matrices restricted to the slice.
    auto boundary_matrix = [&](int dim) {
        Mat<mpz_class> m;
        if (dim < 1 || dim >= static_cast<int>(data.by_dim.size())) return m;
        std::vector<int> cols;
        for (int c = 0; c < data.count(dim); ++c)
            if (data.present(*data.by_dim[dim][c], u)) cols.push_back(c);
        int rows = data.count(dim - 1);
        if (rows == 0 || cols.empty()) return m;
        m.assign(rows, std::vector<mpz_class>(cols.size(), 0));
        for (std::size_t cc = 0; cc < cols.size(); ++cc) {
            const Simplex& s = *data.by_dim[dim][cols[cc]];
            for (std::size_t drop = 0; drop < s.verts.size(); ++drop) {
                std::vector<int> face;
                for (std::size_t t = 0; t < s.verts.size(); ++t)
                    if (t != drop) face.push_back(s.verts[t]);
                m[data.position.at(face)][cc] = (drop % 2 == 0) ? 1 : -1;
            }
        }
        return m;
    };
    long n_i = 0;
    for (int c = 0; c < data.count(i); ++c)
        if (data.present(*data.by_dim[i][c], u)) ++n_i;
    auto di = boundary_matrix(i);
    auto di1 = boundary_matrix(i + 1);
    long rank_di = di.empty() ? 0 : static_cast<long>(rank_integer(di));
    long rank_di1 = di1.empty() ? 0 : static_cast<long>(rank_integer(di1));
    IntegralHomology out;
    out.betti = n_i - rank_di - rank_di1;
    if (!di1.empty()) {
        for (const auto& inv : smith_invariants(di1))
            if (inv > 1) out.torsion.push_back(inv);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Minimal presentations of persistent homology.
// ---------------------------------------------------------------------------

namespace {

template <typename F>
struct PresentationBuilder {
    using E = typename F::Elem;
    const F& f;
    const ChainData& data;
    int degree;
    std::array<int, 2> grid;

    struct PointData {
        Mat<E> bcols;   // boundary columns at u
        Mat<E> reps;    // homology representatives (global cycle vectors)
    };
    std::map<std::array<int, 2>, PointData> points;

    struct Generator {
        std::array<int, 2> grade;
        std::vector<E> cycle;
    };
    std::vector<Generator> gens;
    struct Relation {
        std::array<int, 2> grade;
        std::vector<E> coeffs;  // over all generators (global indexing)
    };
    std::vector<Relation> rels;

    PresentationBuilder(const F& field, const ChainData& cd, int deg, std::array<int, 2> g)
        : f(field), data(cd), degree(deg), grid(g) {}

    // Column-rank profile: indices of an independent spanning subset.
    std::vector<int> profile(const Mat<E>& columns, std::size_t height) const {
        if (columns.empty()) return {};
        Mat<E> m(height, std::vector<E>(columns.size(), f.zero()));
        for (std::size_t c = 0; c < columns.size(); ++c)
            for (std::size_t r = 0; r < height; ++r) m[r][c] = columns[c][r];
        return row_echelon(f, m);
    }

    // Solves [cols] * x = target; the system must be consistent.
    std::vector<E> solve(const Mat<E>& columns, const std::vector<E>& target) const {
        std::size_t height = target.size();
        Mat<E> m(height, std::vector<E>(columns.size() + 1, f.zero()));
        for (std::size_t c = 0; c < columns.size(); ++c)
            for (std::size_t r = 0; r < height; ++r) m[r][c] = columns[c][r];
        for (std::size_t r = 0; r < height; ++r) m[r][columns.size()] = target[r];
        auto pivots = row_echelon(f, m);
        std::vector<E> x(columns.size(), f.zero());
        for (std::size_t pr = 0; pr < pivots.size(); ++pr) {
            if (pivots[pr] == static_cast<int>(columns.size()))
                throw std::logic_error("presentation solve: inconsistent system");
            x[pivots[pr]] = m[pr][columns.size()];
        }
        return x;
    }

    // Class coordinates of a cycle at u with respect to reps(u).
    std::vector<E> class_coords(const std::vector<E>& cycle, const PointData& pd) const {
        Mat<E> cols = pd.bcols;
        for (const auto& r : pd.reps) cols.push_back(r);
        auto x = solve(cols, cycle);
        return std::vector<E>(x.begin() + pd.bcols.size(), x.end());
    }

    void build() {
        Homology<F> H(f, data);
        std::vector<std::array<int, 2>> order;
        for (int a = 0; a <= grid[0]; ++a)
            for (int b = 0; b <= grid[1]; ++b) order.push_back({a, b});
        std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
            if (a[0] + a[1] != b[0] + b[1]) return a[0] + a[1] < b[0] + b[1];
            return a < b;
        });

        // Representatives at every grid point.
        for (const auto& u : order) {
            PointData pd;
            pd.bcols = H.boundary_columns(degree, u);
            auto Z = H.cycle_basis(degree, u);
            // Extend the boundary columns to a basis of the cycles; the added
            // cycle vectors represent a homology basis.
            Mat<E> cols = pd.bcols;
            for (const auto& z : Z) cols.push_back(z);
            std::size_t height = Z.empty() ? (pd.bcols.empty() ? 0 : pd.bcols[0].size())
                                           : Z[0].size();
            auto piv = profile(cols, height);
            for (int p : piv)
                if (p >= static_cast<int>(pd.bcols.size()))
                    pd.reps.push_back(Z[p - pd.bcols.size()]);
            points[u] = std::move(pd);
        }

        // Minimal generators, then minimal relations, gradewise.
        std::map<std::array<int, 2>, Mat<E>> kernels;
        for (const auto& u : order) {
            const PointData& pd = points.at(u);
            std::size_t h = pd.reps.size();

            // Incoming classes from the one-step predecessors.
            Mat<E> incoming;
            for (int axis = 0; axis < 2; ++axis) {
                if (u[axis] == 0) continue;
                std::array<int, 2> prev = u;
                --prev[axis];
                for (const auto& rep : points.at(prev).reps)
                    incoming.push_back(class_coords(rep, pd));
            }
            // New generators complete the incoming span inside H(u).
            {
                Mat<E> cols = incoming;
                for (std::size_t j = 0; j < h; ++j) {
                    std::vector<E> unit(h, f.zero());
                    unit[j] = f.one();
                    cols.push_back(std::move(unit));
                }
                for (int p : profile(cols, h))
                    if (p >= static_cast<int>(incoming.size()))
                        gens.push_back({u, pd.reps[p - incoming.size()]});
            }

            // Syzygies among the generators born so far.
            std::vector<int> live;  // global generator indices with grade <= u
            for (std::size_t g = 0; g < gens.size(); ++g)
                if (gens[g].grade[0] <= u[0] && gens[g].grade[1] <= u[1])
                    live.push_back(static_cast<int>(g));
            Mat<E> psi(h, std::vector<E>(live.size(), f.zero()));
            for (std::size_t c = 0; c < live.size(); ++c) {
                auto coords = class_coords(gens[live[c]].cycle, pd);
                for (std::size_t r = 0; r < h; ++r) psi[r][c] = coords[r];
            }
            Mat<E> ker = kernel_basis(f, psi, live.size());
            // Embed into global generator coordinates.
            Mat<E> kernel_global;
            for (const auto& kv : ker) {
                std::vector<E> v(gens.size(), f.zero());
                for (std::size_t c = 0; c < live.size(); ++c) v[live[c]] = kv[c];
                kernel_global.push_back(std::move(v));
            }
            // Minimal relations complete the span of the shifted kernels.
            Mat<E> old_kernels;
            for (int axis = 0; axis < 2; ++axis) {
                if (u[axis] == 0) continue;
                std::array<int, 2> prev = u;
                --prev[axis];
                for (const auto& kv : kernels[prev]) {
                    std::vector<E> v = kv;
                    v.resize(gens.size(), f.zero());
                    old_kernels.push_back(std::move(v));
                }
            }
            {
                Mat<E> cols = old_kernels;
                for (const auto& kv : kernel_global) cols.push_back(kv);
                for (int p : profile(cols, gens.size()))
                    if (p >= static_cast<int>(old_kernels.size()))
                        rels.push_back({u, kernel_global[p - old_kernels.size()]});
            }
            kernels[u] = std::move(kernel_global);
        }
    }
};

template <typename F>
HomologyPresentation assemble(const F& f, const Bifiltration& b, int degree, long prime) {
    ChainData data(b);
    PresentationBuilder<F> builder(f, data, degree, b.grid);
    builder.build();

    RingPtr R = prime == 0 ? make_ring(2, CoeffDomain::Integers, 0, {"x", "y"})
                           : make_ring(2, CoeffDomain::PrimeField, prime, {"x", "y"});

    HomologyPresentation out;
    GradedFreeModule f0, f1;
    f0.nvars = f1.nvars = 2;
    auto group = [](const std::vector<Grade>& grades) {
        std::vector<std::pair<Grade, int>> out_summands;
        for (const auto& g : grades) {
            if (!out_summands.empty() && out_summands.back().first == g) {
                ++out_summands.back().second;
            } else {
                out_summands.emplace_back(g, 1);
            }
        }
        return out_summands;
    };
    std::vector<Grade> gen_grades, rel_grades;
    for (const auto& g : builder.gens) gen_grades.push_back({g.grade[0], g.grade[1]});
    for (const auto& r : builder.rels) rel_grades.push_back({r.grade[0], r.grade[1]});
    f0.summands = group(gen_grades);
    f1.summands = group(rel_grades);
    out.generators = f0.summands;
    out.relations = f1.summands;

    PolyMatrix m(R, static_cast<int>(builder.gens.size()), static_cast<int>(builder.rels.size()));
    for (std::size_t c = 0; c < builder.rels.size(); ++c) {
        const auto& rel = builder.rels[c];
        // Integer content of the column: over QQ clear denominators and divide
        // by the gcd; over ZZ/p lift the residues.
        std::vector<mpz_class> column(builder.gens.size(), 0);
        if constexpr (std::is_same_v<F, FieldQ>) {
            mpz_class lcm = 1;
            for (const auto& v : rel.coeffs) {
                mpz_class d = v.get_den();
                mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
            }
            mpz_class gcd = 0;
            for (std::size_t g = 0; g < rel.coeffs.size() && g < column.size(); ++g) {
                mpq_class scaled = rel.coeffs[g] * mpq_class(lcm);
                column[g] = scaled.get_num();
                mpz_class a = abs(column[g]);
                mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), a.get_mpz_t());
            }
            if (gcd > 1)
                for (auto& v : column) v /= gcd;
        } else {
            for (std::size_t g = 0; g < rel.coeffs.size(); ++g) column[g] = rel.coeffs[g];
        }
        for (std::size_t g = 0; g < builder.gens.size(); ++g) {
            if (column[g] == 0) continue;
            Monomial mono({rel.grade[0] - builder.gens[g].grade[0],
                           rel.grade[1] - builder.gens[g].grade[1]});
            m.set(static_cast<int>(g), static_cast<int>(c),
                  Polynomial::term(R, mono, column[g]));
        }
    }
    out.map.source = f1;
    out.map.target = f0;
    out.map.mat = m;

    // Audit: the cokernel dimensions must reproduce the homology dimensions
    // at every grid point.
    for (int a = 0; a <= b.grid[0]; ++a)
        for (int bb = 0; bb <= b.grid[1]; ++bb) {
            std::array<int, 2> u{a, bb};
            long h = rank_invariant_impl(f, data, degree, u, u);
            long gens_here = 0;
            Mat<typename F::Elem> relcols;
            for (const auto& g : builder.gens)
                if (g.grade[0] <= a && g.grade[1] <= bb) ++gens_here;
            for (const auto& r : builder.rels) {
                if (r.grade[0] > a || r.grade[1] > bb) continue;
                std::vector<typename F::Elem> v = r.coeffs;
                v.resize(builder.gens.size(), f.zero());
                relcols.push_back(std::move(v));
            }
            long rk = rank_of_rows(f, std::move(relcols));
            if (gens_here - rk != h)
                throw std::logic_error("presentation audit failed: cokernel dimension mismatch");
        }
    return out;
}

}  // namespace

HomologyPresentation presentation_of_homology(const Bifiltration& b, int i, long prime) {
    if (prime == 0) return assemble(FieldQ{}, b, i, 0);
    FieldZp f(prime);
    return assemble(f, b, i, prime);
}

}  // namespace persalg
