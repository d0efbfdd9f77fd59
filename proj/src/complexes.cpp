#include "persalg/complexes.hpp"

#include <functional>
#include <nlohmann/json.hpp>

namespace persalg {

using json = nlohmann::json;

FreeComplex::FreeComplex(RingPtr r, std::vector<int> b, std::vector<PolyMatrix> d)
    : ring(std::move(r)), betti(std::move(b)), diff(std::move(d)) {
    if (betti.size() < 2) throw std::invalid_argument("FreeComplex: need at least one map");
    if (diff.size() + 1 != betti.size())
        throw std::invalid_argument("FreeComplex: differential count mismatch");
    for (std::size_t k = 0; k < diff.size(); ++k) {
        require_same_ring(ring, diff[k].ring(), "FreeComplex");
        if (diff[k].rows() != betti[k] || diff[k].cols() != betti[k + 1])
            throw std::invalid_argument("FreeComplex: differential shape mismatch");
    }
}

std::string FreeComplex::to_json() const {
    json j;
    j["betti"] = betti;
    json ringj;
    ringj["vars"] = ring->nvars();
    ringj["coeffs"] = ring->is_field() ? "ZZ/" + std::to_string(ring->prime()) : "ZZ";
    ringj["names"] = ring->names();
    j["ring"] = ringj;
    json ds = json::array();
    for (const auto& m : diff) {
        json rows = json::array();
        for (int i = 0; i < m.rows(); ++i) {
            json row = json::array();
            for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(i, c).to_string());
            rows.push_back(row);
        }
        ds.push_back(rows);
    }
    j["differentials"] = ds;
    return j.dump(2);
}

FreeComplex FreeComplex::from_json(const std::string& text) {
    json j = json::parse(text);
    int nvars = j.at("ring").at("vars").get<int>();
    CoeffDomain dom = CoeffDomain::Integers;
    long p = 0;
    if (j["ring"].contains("coeffs")) {
        std::string c = j["ring"]["coeffs"].get<std::string>();
        if (c.rfind("ZZ/", 0) == 0) {
            dom = CoeffDomain::PrimeField;
            p = std::stol(c.substr(3));
        }
    }
    std::vector<std::string> names;
    if (j["ring"].contains("names")) names = j["ring"]["names"].get<std::vector<std::string>>();
    RingPtr ring = make_ring(nvars, dom, p, names);
    auto betti = j.at("betti").get<std::vector<int>>();
    std::vector<PolyMatrix> mats;
    for (const auto& rows : j.at("differentials"))
        mats.push_back(PolyMatrix::from_strings(ring, rows.get<std::vector<std::vector<std::string>>>()));
    return FreeComplex(ring, betti, mats);
}

std::optional<std::vector<int>> rank_conditions(const std::vector<int>& betti) {
    if (betti.empty()) return std::nullopt;
    for (int b : betti)
        if (b < 0) return std::nullopt;
    int n = static_cast<int>(betti.size()) - 1;
    std::vector<int> r(betti.size());
    r[n] = betti[n];
    for (int k = n - 1; k >= 0; --k) r[k] = betti[k] - r[k + 1];
    for (int v : r)
        if (v < 0) return std::nullopt;
    return r;
}

bool is_complex(const FreeComplex& c) {
    for (int k = 1; k + 1 <= c.length(); ++k)
        if (!(c.d(k) * c.d(k + 1)).is_zero()) return false;
    return true;
}

namespace {

void validate_ranks(const FreeComplex& c, const std::vector<int>& ranks) {
    int n = c.length();
    if (static_cast<int>(ranks.size()) != n)
        throw std::invalid_argument("ranks: expected one rank per differential");
    for (int k = 1; k <= n; ++k) {
        int rk = ranks[k - 1];
        int rnext = k < n ? ranks[k] : 0;
        if (rk < 0 || rk > std::min(c.betti[k - 1], c.betti[k]))
            throw BeFormatError("rank out of range at level " + std::to_string(k));
        if (c.betti[k] != rk + rnext)
            throw BeFormatError("betti/rank mismatch b_k = r_k + r_{k+1} fails at k = " +
                                std::to_string(k));
    }
    if (c.betti[0] < ranks[0]) throw BeFormatError("rank exceeds b_0");
}

}  // namespace

MultiplierTable be_multipliers(const FreeComplex& c, const std::vector<int>& ranks) {
    validate_ranks(c, ranks);
    int n = c.length();
    const RingPtr& R = c.ring;
    for (int k = 1; k <= n; ++k) {
        if (rank(c.d(k)) != ranks[k - 1])
            throw BeFormatError("differential " + std::to_string(k) +
                                " does not have the claimed rank");
    }

    MultiplierTable table;
    table.levels.resize(n + 1);
    table.levels[n][{}] = Polynomial::constant(R, 1);  // level N+1 unit

    for (int k = n; k >= 1; --k) {
        int rk = ranks[k - 1];
        auto& level = table.levels[k - 1];
        if (rk == 0) {
            level[{}] = Polynomial::constant(R, 1);
            continue;
        }
        auto row_sets = subsets_colex(c.betti[k - 1], rk);
        if (k == n) {
            // r_N = b_N here, so these are the maximal minors of d_N.
            std::vector<int> all_cols;
            for (int j = 1; j <= c.betti[k]; ++j) all_cols.push_back(j);
            for (const auto& a : row_sets)
                level[a.elems] = c.d(k).minor_det(a, SubsetIndex(all_cols));
            continue;
        }
        const auto& next = table.levels[k];
        auto col_sets = subsets_colex(c.betti[k], rk);
        for (const auto& a : row_sets) {
            bool solved = false;
            for (const auto& e : col_sets) {
                SubsetIndex ec = e.complement(c.betti[k]);
                auto it = next.find(ec.elems);
                if (it == next.end() || it->second.is_zero()) continue;
                int sgn = concat_sign(ec.elems, e.elems);
                Polynomial minor = c.d(k).minor_det(SubsetIndex(a.elems), e);
                auto q = minor.exact_divide(it->second.scaled(sgn));
                if (!q)
                    throw BeFormatError(
                        "complex not of the claimed rank format: a level-" + std::to_string(k) +
                        " minor is not divisible by the adjacent multiplier");
                level[a.elems] = *q;
                solved = true;
                break;
            }
            if (!solved)
                throw BeFormatError("complex not of the claimed rank format: no usable relation at level " +
                                    std::to_string(k));
        }
    }
    return table;
}

bool be_diagram_check(const FreeComplex& c, const std::vector<int>& ranks,
                      const MultiplierTable& table) {
    validate_ranks(c, ranks);
    int n = c.length();
    for (int k = 1; k <= n; ++k) {
        int rk = ranks[k - 1];
        if (rk == 0) continue;  // vacuous level
        for (const auto& a : subsets_colex(c.betti[k - 1], rk)) {
            const Polynomial& ma = table.at(k, a.elems);
            for (const auto& e : subsets_colex(c.betti[k], rk)) {
                SubsetIndex ec = e.complement(c.betti[k]);
                int sgn = concat_sign(ec.elems, e.elems);
                Polynomial lhs = c.d(k).minor_det(a, e);
                Polynomial rhs = (ma * table.at(k + 1, ec.elems)).scaled(sgn);
                if (!(lhs == rhs)) return false;
            }
        }
    }
    return true;
}

namespace {

std::vector<int> sorted_union(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> u = a;
    u.insert(u.end(), b.begin(), b.end());
    std::sort(u.begin(), u.end());
    return u;
}

std::vector<int> set_difference_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    for (int x : a)
        if (std::find(b.begin(), b.end(), x) == b.end()) out.push_back(x);
    return out;
}

std::vector<int> set_intersection_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    for (int x : a)
        if (std::find(b.begin(), b.end(), x) != b.end()) out.push_back(x);
    return out;
}

// All q-subsets of `pool` that contain `forced` (both sorted).
std::vector<std::vector<int>> subsets_containing(const std::vector<int>& pool,
                                                 const std::vector<int>& forced, int q) {
    std::vector<std::vector<int>> out;
    if (static_cast<int>(forced.size()) > q) return out;
    std::vector<int> rest = set_difference_sorted(pool, forced);
    int need = q - static_cast<int>(forced.size());
    if (need > static_cast<int>(rest.size())) return out;
    std::vector<int> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (static_cast<int>(pick.size()) == need) {
            std::vector<int> g = forced;
            g.insert(g.end(), pick.begin(), pick.end());
            std::sort(g.begin(), g.end());
            out.push_back(g);
            return;
        }
        for (std::size_t i = start; i < rest.size(); ++i) {
            pick.push_back(rest[i]);
            rec(i + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return out;
}

const Polynomial& lookup_multiplier(const MultiplierTable& t, int level,
                                    const std::vector<int>& key, const RingPtr& R) {
    static thread_local Polynomial zero;
    auto it = t.levels.at(level - 1).find(key);
    if (it == t.levels.at(level - 1).end()) {
        zero = Polynomial::zero(R);
        return zero;
    }
    return it->second;
}

}  // namespace

Polynomial tchernev_identity(const FreeComplex& c, const std::vector<int>& ranks,
                             const MultiplierTable& table, const TchernevV1& ix) {
    int k = ix.level;
    int rk = ranks.at(k - 1);
    int p = rk - static_cast<int>(ix.a.size());
    int q = rk - static_cast<int>(ix.d.size());
    if (p < 0 || q < 0 || static_cast<int>(ix.c.size()) != p + q || p + q < rk + 1)
        throw std::invalid_argument("tchernev v1: cardinality constraints violated");
    Polynomial acc = Polynomial::zero(c.ring);
    auto ca = set_intersection_sorted(ix.c, ix.a);
    auto pool = set_difference_sorted(ix.c, ix.d);
    for (const auto& gamma : subsets_containing(pool, ca, q)) {
        auto cg = set_difference_sorted(ix.c, gamma);
        int s1 = concat_sign(ix.a, cg);
        int s2 = concat_sign(cg, gamma);
        int s3 = concat_sign(gamma, ix.d);
        if (s1 == 0 || s2 == 0 || s3 == 0) continue;
        const Polynomial& m1 = lookup_multiplier(table, k, sorted_union(ix.a, cg), c.ring);
        const Polynomial& m2 = lookup_multiplier(table, k, sorted_union(gamma, ix.d), c.ring);
        acc = acc + (m1 * m2).scaled(s1 * s2 * s3);
    }
    return acc;
}

Polynomial tchernev_identity(const FreeComplex& c, const std::vector<int>& ranks,
                             const MultiplierTable& table, const TchernevV2& ix) {
    int k = ix.level;
    int rk = ranks.at(k - 1);
    int p = rk - static_cast<int>(ix.a.size());
    int s = static_cast<int>(ix.f.size());
    int q = s - static_cast<int>(ix.e.size());
    if (p < 0 || q < 0 || s > rk || static_cast<int>(ix.c.size()) != p + q || p + q < rk + 1)
        throw std::invalid_argument("tchernev v2: cardinality constraints violated");
    Polynomial acc = Polynomial::zero(c.ring);
    auto ca = set_intersection_sorted(ix.c, ix.a);
    auto pool = set_difference_sorted(ix.c, ix.e);
    for (const auto& gamma : subsets_containing(pool, ca, q)) {
        auto cg = set_difference_sorted(ix.c, gamma);
        int s1 = concat_sign(ix.a, cg);
        int s2 = concat_sign(cg, gamma);
        int s3 = concat_sign(gamma, ix.e);
        if (s1 == 0 || s2 == 0 || s3 == 0) continue;
        const Polynomial& m1 = lookup_multiplier(table, k, sorted_union(ix.a, cg), c.ring);
        Polynomial minor =
            c.d(k).minor_det(SubsetIndex(sorted_union(gamma, ix.e)), SubsetIndex(ix.f));
        acc = acc + (m1 * minor).scaled(s1 * s2 * s3);
    }
    return acc;
}

Polynomial tchernev_identity(const FreeComplex& c, const std::vector<int>& ranks,
                             const MultiplierTable& table, const TchernevV3& ix) {
    int k = ix.level;
    int rk = ranks.at(k - 1);
    int rk1 = k < c.length() ? ranks.at(k) : 0;
    int m = static_cast<int>(ix.g.size());
    int t = ix.t;
    if (m > rk || static_cast<int>(ix.lambda.size()) >= t || t > std::min(m, rk1) ||
        static_cast<int>(ix.h.size()) != m - t || static_cast<int>(ix.kk.size()) != rk1 - t)
        throw std::invalid_argument("tchernev v3: cardinality constraints violated");
    Polynomial acc = Polynomial::zero(c.ring);
    std::vector<int> pool;
    for (int v = 1; v <= c.betti[k]; ++v) {
        if (std::find(ix.lambda.begin(), ix.lambda.end(), v) != ix.lambda.end()) continue;
        if (std::find(ix.h.begin(), ix.h.end(), v) != ix.h.end()) continue;
        if (std::find(ix.kk.begin(), ix.kk.end(), v) != ix.kk.end()) continue;
        pool.push_back(v);
    }
    for (const auto& gamma : subsets_containing(pool, {}, t)) {
        int s1 = concat_sign(ix.h, gamma);
        int s2 = concat_sign(gamma, ix.kk);
        if (s1 == 0 || s2 == 0) continue;
        Polynomial minor =
            c.d(k).minor_det(SubsetIndex(ix.g), SubsetIndex(sorted_union(ix.h, gamma)));
        const Polynomial& mult = lookup_multiplier(table, k + 1, sorted_union(gamma, ix.kk), c.ring);
        acc = acc + (minor * mult).scaled(s1 * s2);
    }
    return acc;
}

long tchernev_spot_check(const FreeComplex& c, const std::vector<int>& ranks,
                         const MultiplierTable& table, long max_instances) {
    long checked = 0;
    int n = c.length();
    auto fail = [&](const std::string& which) {
        throw BeFormatError("tchernev identity " + which + " is nonzero");
    };
    for (int k = 1; k <= n && checked < max_instances; ++k) {
        int rk = ranks[k - 1];
        int rk1 = k < n ? ranks[k] : 0;
        int b0 = c.betti[k - 1], b1 = c.betti[k];
        // Variant 1 and 2 need |C| = p + q >= r_k + 1 inside [b_{k-1}].
        for (int p = 0; p <= rk && checked < max_instances; ++p) {
            for (int q = 0; q <= rk && checked < max_instances; ++q) {
                if (p + q < rk + 1 || p + q > b0) continue;
                auto as = subsets_colex(b0, rk - p);
                auto cs = subsets_colex(b0, p + q);
                auto ds = subsets_colex(b0, rk - q);
                for (const auto& a : as)
                    for (const auto& cc : cs)
                        for (const auto& dd : ds) {
                            if (checked >= max_instances) break;
                            TchernevV1 ix{k, a.elems, cc.elems, dd.elems};
                            if (!tchernev_identity(c, ranks, table, ix).is_zero()) fail("1");
                            ++checked;
                        }
                // Variant 2 with s = q + |E|, E of size s - q.
                for (int s = q; s <= rk && checked < max_instances; ++s) {
                    auto es = subsets_colex(b0, s - q);
                    auto fs = subsets_colex(b1, s);
                    for (const auto& a : as)
                        for (const auto& cc : cs)
                            for (const auto& e : es)
                                for (const auto& f : fs) {
                                    if (checked >= max_instances) break;
                                    TchernevV2 ix{k, a.elems, cc.elems, e.elems, f.elems};
                                    if (!tchernev_identity(c, ranks, table, ix).is_zero()) fail("2");
                                    ++checked;
                                }
                }
            }
        }
        // Variant 3.
        for (int m = 1; m <= rk && checked < max_instances; ++m) {
            for (int t = 1; t <= std::min(m, rk1) && checked < max_instances; ++t) {
                auto gs = subsets_colex(b0, m);
                auto hs = subsets_colex(b1, m - t);
                auto ks = subsets_colex(b1, rk1 - t);
                for (const auto& g : gs)
                    for (const auto& h : hs)
                        for (const auto& kset : ks) {
                            if (checked >= max_instances) break;
                            TchernevV3 ix{k, g.elems, h.elems, kset.elems, {}, t};
                            if (!tchernev_identity(c, ranks, table, ix).is_zero()) fail("3");
                            ++checked;
                        }
            }
        }
    }
    return checked;
}

std::vector<Polynomial> GenericComplexRing::all_generators() const {
    std::vector<Polynomial> out;
    for (const auto& block : product_blocks) out.insert(out.end(), block.begin(), block.end());
    return out;
}

GenericComplexRing generic_complex_ring(const std::vector<int>& betti) {
    if (betti.size() < 2) throw std::invalid_argument("generic_complex_ring: need a format");
    int total = 0;
    for (std::size_t k = 0; k + 1 < betti.size(); ++k) total += betti[k] * betti[k + 1];
    std::vector<std::string> names;
    for (int i = 1; i <= total; ++i) names.push_back("y_" + std::to_string(i));
    GenericComplexRing out;
    out.ring = make_ring(std::max(total, 1), CoeffDomain::Integers, 0, names, MonomialOrder::GradedRevLex, "y");
    int offset = 0;
    for (std::size_t k = 0; k + 1 < betti.size(); ++k) {
        out.mats.push_back(generic_matrix(out.ring, offset, betti[k], betti[k + 1]));
        offset += betti[k] * betti[k + 1];
    }
    for (std::size_t k = 0; k + 1 < out.mats.size(); ++k) {
        PolyMatrix prod = out.mats[k] * out.mats[k + 1];
        std::vector<Polynomial> block;
        for (int i = 0; i < prod.rows(); ++i)
            for (int j = 0; j < prod.cols(); ++j) block.push_back(prod.at(i, j));
        out.product_blocks.push_back(std::move(block));
    }
    return out;
}

ExactificationStep exactification_step(const GenericComplexRing& s0,
                                       const std::vector<ExactificationCycle>& cycles) {
    int n = static_cast<int>(s0.mats.size());
    std::vector<int> betti;
    betti.push_back(s0.mats.empty() ? 0 : s0.mats[0].rows());
    for (const auto& m : s0.mats) betti.push_back(m.cols());

    // Count cycles per level to index the Z blocks.
    std::vector<int> seen(n + 1, 0);
    ExactificationStep out;
    std::vector<std::string> names = s0.ring->names();
    struct ZBlock {
        int level, u;  // cycle number within its level
        int first_var;
    };
    std::vector<ZBlock> blocks;
    for (const auto& cyc : cycles) {
        if (cyc.level < 1 || cyc.level > n)
            throw std::invalid_argument("exactification_step: cycle level out of range");
        if (static_cast<int>(cyc.coords.size()) != betti[cyc.level])
            throw std::invalid_argument("exactification_step: cycle length does not match betti");
        ++seen[cyc.level];
        if (cyc.level < n) {
            ZBlock b{cyc.level, seen[cyc.level], static_cast<int>(names.size())};
            for (int l = 1; l <= betti[cyc.level + 1]; ++l) {
                std::string nm = "Z_" + std::to_string(b.u) + "_" + std::to_string(cyc.level) +
                                 "_" + std::to_string(l);
                names.push_back(nm);
                out.z_names.push_back(nm);
            }
            blocks.push_back(b);
        }
    }
    out.extended_ring = make_ring(static_cast<int>(names.size()), s0.ring->domain(),
                                  s0.ring->prime(), names);

    // Lift of the original variables.
    std::vector<Polynomial> images;
    for (int i = 0; i < s0.ring->nvars(); ++i)
        images.push_back(Polynomial::variable(out.extended_ring, i));

    std::vector<int> counter(n + 1, 0);
    std::size_t block_idx = 0;
    for (const auto& cyc : cycles) {
        ++counter[cyc.level];
        if (cyc.level == n) {
            // Cycle coordinates at the top level become generators directly.
            for (const auto& coord : cyc.coords)
                out.generators.push_back(coord.substitute(out.extended_ring, images));
            continue;
        }
        const ZBlock& b = blocks.at(block_idx++);
        const PolyMatrix& next = s0.mats[cyc.level];  // d_{k+1}: b_k x b_{k+1}
        int bk = betti[cyc.level];
        int bk1 = betti[cyc.level + 1];
        for (int j = 1; j <= bk; ++j) {
            Polynomial gen = cyc.coords[j - 1].substitute(out.extended_ring, images);
            for (int l = j; l <= bk1; ++l) {
                Polynomial z = Polynomial::variable(out.extended_ring, b.first_var + (l - 1));
                Polynomial x = next.at(j - 1, l - 1).substitute(out.extended_ring, images);
                gen = gen - z * x;
            }
            out.generators.push_back(gen);
        }
    }
    return out;
}

}  // namespace persalg
