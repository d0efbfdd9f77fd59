#include "persalg/tableaux.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace persalg {

std::vector<Partition> partitions_of(int m) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int maxpart) {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    if (m == 0) {
        out.emplace_back();
        return out;
    }
    rec(m, m);
    return out;
}

bool Tableau::valid_shape() const {
    for (std::size_t i = 0; i + 1 < rows.size(); ++i)
        if (rows[i].size() < rows[i + 1].size()) return false;
    return true;
}

std::string Tableau::to_string() const {
    bool compact = true;
    for (const auto& r : rows)
        for (int e : r)
            if (e > 9) compact = false;
    std::ostringstream out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out << "/";
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (j && !compact) out << ",";
            out << rows[i][j];
        }
    }
    return out.str();
}

Tableau Tableau::parse(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::vector<int> row;
    bool has_comma = text.find(',') != std::string::npos;
    std::string num;
    auto flush_num = [&] {
        if (!num.empty()) {
            row.push_back(std::stoi(num));
            num.clear();
        }
    };
    for (char c : text) {
        if (c == '/') {
            flush_num();
            rows.push_back(row);
            row.clear();
        } else if (c == ',') {
            flush_num();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            if (has_comma) {
                num.push_back(c);
            } else {
                row.push_back(c - '0');
            }
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            throw std::invalid_argument("Tableau::parse: bad character");
        }
    }
    flush_num();
    rows.push_back(row);
    return Tableau(std::move(rows));
}

bool is_standard(const Tableau& t) {
    if (!t.valid_shape()) throw std::invalid_argument("is_standard: ragged filling");
    for (const auto& r : t.rows)
        for (std::size_t j = 0; j + 1 < r.size(); ++j)
            if (r[j] >= r[j + 1]) return false;
    for (std::size_t i = 0; i + 1 < t.rows.size(); ++i)
        for (std::size_t j = 0; j < t.rows[i + 1].size(); ++j)
            if (t.rows[i][j] > t.rows[i + 1][j]) return false;
    return true;
}

bool is_standard(const Bitableau& bt) { return is_standard(bt.left) && is_standard(bt.right); }

Bitableau Bitableau::parse(const std::string& text) {
    auto open = text.find('(');
    auto bar = text.find('|');
    auto close = text.rfind(')');
    if (open == std::string::npos || bar == std::string::npos || close == std::string::npos)
        throw std::invalid_argument("Bitableau::parse: expected (left | right)");
    return Bitableau(Tableau::parse(text.substr(open + 1, bar - open - 1)),
                     Tableau::parse(text.substr(bar + 1, close - bar - 1)));
}

void add_to(TableauSum& sum, const Tableau& t, const mpz_class& c) {
    auto it = sum.find(t);
    if (it == sum.end()) {
        if (c != 0) sum.emplace(t, c);
        return;
    }
    it->second += c;
    if (it->second == 0) sum.erase(it);
}

void add_to(BitableauSum& sum, const Bitableau& t, const mpz_class& c) {
    auto it = sum.find(t);
    if (it == sum.end()) {
        if (c != 0) sum.emplace(t, c);
        return;
    }
    it->second += c;
    if (it->second == 0) sum.erase(it);
}

namespace {

mpz_class det_listed(const Mat<mpz_class>& m, const std::vector<int>& rows1b,
                     const std::vector<int>& cols1b) {
    Mat<mpz_class> sub(rows1b.size(), std::vector<mpz_class>(cols1b.size()));
    for (std::size_t i = 0; i < rows1b.size(); ++i)
        for (std::size_t j = 0; j < cols1b.size(); ++j)
            sub[i][j] = m.at(rows1b[i] - 1).at(cols1b[j] - 1);
    return det_bareiss(std::move(sub));
}

}  // namespace

mpz_class eval_tableau(const Tableau& t, const Mat<mpz_class>& m) {
    mpz_class prod = 1;
    for (const auto& row : t.rows) {
        std::vector<int> first_rows;
        for (std::size_t i = 1; i <= row.size(); ++i) first_rows.push_back(static_cast<int>(i));
        prod *= det_listed(m, first_rows, row);
        if (prod == 0) return prod;
    }
    return prod;
}

mpz_class eval_tableau_sum(const TableauSum& s, const Mat<mpz_class>& m) {
    mpz_class acc = 0;
    for (const auto& [t, c] : s) acc += c * eval_tableau(t, m);
    return acc;
}

mpz_class eval_bitableau(const Bitableau& bt, const Mat<mpz_class>& m) {
    mpz_class prod = 1;
    for (std::size_t a = 0; a < bt.left.rows.size(); ++a) {
        prod *= det_listed(m, bt.left.rows[a], bt.right.rows[a]);
        if (prod == 0) return prod;
    }
    return prod;
}

mpz_class eval_bitableau_sum(const BitableauSum& s, const Mat<mpz_class>& m) {
    mpz_class acc = 0;
    for (const auto& [t, c] : s) acc += c * eval_bitableau(t, m);
    return acc;
}

TableauSum shuffle_relation(const ShuffleInput& in) {
    const auto& shape = in.shape.parts;
    if (shape.size() < 2) return {};  // no adjacent row pair, no relations
    int a = in.row_a;
    if (a < 1 || a + 1 > static_cast<int>(shape.size()))
        throw std::invalid_argument("shuffle_relation: row index out of range");
    int la = shape[a - 1], lb = shape[a];
    int u = static_cast<int>(in.prefix.size());
    int v = static_cast<int>(in.suffix.size());
    if (u + v >= lb) throw std::invalid_argument("shuffle_relation: requires u + v < lambda_{a+1}");
    int middle_len = la - u + lb - v;
    if (static_cast<int>(in.middle.size()) != middle_len)
        throw std::invalid_argument("shuffle_relation: middle block has wrong length");
    if (static_cast<int>(in.other_rows.size()) != static_cast<int>(shape.size()) - 2)
        throw std::invalid_argument("shuffle_relation: wrong number of fixed rows");
    {
        std::size_t k = 0;
        for (std::size_t i = 0; i < shape.size(); ++i) {
            if (static_cast<int>(i) == a - 1 || static_cast<int>(i) == a) continue;
            if (static_cast<int>(in.other_rows[k].size()) != shape[i])
                throw std::invalid_argument("shuffle_relation: fixed row length mismatch");
            ++k;
        }
    }

    TableauSum out;
    int take = la - u;  // how many middle entries land in row a
    std::vector<int> pick(take);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == take) {
            std::vector<bool> used(middle_len, false);
            for (int p : pick) used[p] = true;
            // Shuffle sign: inversions between chosen and unchosen positions.
            long inv = 0;
            for (int p : pick)
                for (int q = 0; q < p; ++q)
                    if (!used[q]) ++inv;
            std::vector<int> row_top = in.prefix;
            for (int p : pick) row_top.push_back(in.middle[p]);
            std::vector<int> row_bot;
            for (int q = 0; q < middle_len; ++q)
                if (!used[q]) row_bot.push_back(in.middle[q]);
            row_bot.insert(row_bot.end(), in.suffix.begin(), in.suffix.end());

            std::vector<std::vector<int>> rows;
            std::size_t k = 0;
            for (std::size_t i = 0; i < shape.size(); ++i) {
                if (static_cast<int>(i) == a - 1) {
                    rows.push_back(row_top);
                } else if (static_cast<int>(i) == a) {
                    rows.push_back(row_bot);
                } else {
                    rows.push_back(in.other_rows[k++]);
                }
            }
            add_to(out, Tableau(std::move(rows)), inv % 2 == 0 ? 1 : -1);
            return;
        }
        for (int p = start; p <= middle_len - (take - depth); ++p) {
            pick[depth] = p;
            rec(p + 1, depth + 1);
        }
    };
    rec(0, 0);
    return out;
}

long schur_dimension(const Partition& shape, int n) {
    if (shape.parts.empty()) return 1;
    long count = 0;
    std::vector<std::vector<int>> rows;
    std::function<void(std::size_t)> rec = [&](std::size_t r) {
        if (r == shape.parts.size()) {
            ++count;
            return;
        }
        int len = shape.parts[r];
        std::vector<int> row(len);
        std::function<void(int, int)> fill = [&](int pos, int minval) {
            if (pos == len) {
                rows.push_back(row);
                rec(r + 1);
                rows.pop_back();
                return;
            }
            int lo = minval;
            if (r > 0) lo = std::max(lo, rows[r - 1][pos]);  // columns nondecreasing
            for (int val = lo; val <= n; ++val) {
                row[pos] = val;
                fill(pos + 1, val + 1);  // rows strictly increasing
            }
        };
        fill(0, 1);
    };
    rec(0);
    return count;
}

PluckerRing plucker_ring(int r, int k) {
    if (r < 1 || r > k) throw std::invalid_argument("plucker_ring: need 0 < r <= k");
    PluckerRing pr;
    pr.subsets = subsets_colex(k, r);
    std::vector<std::string> names;
    for (const auto& s : pr.subsets) {
        std::string n = "x_";
        bool wide = k > 9;
        for (std::size_t i = 0; i < s.elems.size(); ++i) {
            if (i && wide) n += "_";
            n += std::to_string(s.elems[i]);
        }
        names.push_back(n);
    }
    pr.ring = make_ring(static_cast<int>(pr.subsets.size()), CoeffDomain::Integers, 0, names);
    return pr;
}

std::vector<Polynomial> plucker_relations(int r, int k) {
    if (r < 1 || r >= k) {
        if (r >= 1 && r == k) return {};  // a single coordinate, no relations
        throw std::invalid_argument("plucker_relations: need 0 < r < k");
    }
    PluckerRing pr = plucker_ring(r, k);
    std::map<std::vector<int>, int> index_of;
    for (std::size_t i = 0; i < pr.subsets.size(); ++i) index_of[pr.subsets[i].elems] = static_cast<int>(i);

    std::vector<Polynomial> out;
    std::map<std::string, bool> seen;
    if (r == 1) return out;  // projective space: no relations

    auto var = [&](const std::vector<int>& sorted_set) {
        return Polynomial::variable(pr.ring, index_of.at(sorted_set));
    };

    for (const auto& s : subsets_colex(k, r - 1)) {
        for (const auto& t : subsets_colex(k, r + 1)) {
            Polynomial rel = Polynomial::zero(pr.ring);
            for (std::size_t i = 0; i < t.elems.size(); ++i) {
                int ti = t.elems[i];
                bool repeat = std::find(s.elems.begin(), s.elems.end(), ti) != s.elems.end();
                if (repeat) continue;  // alternating symbol vanishes
                std::vector<int> su = s.elems;
                int greater = 0;
                for (int e : s.elems)
                    if (e > ti) ++greater;
                su.push_back(ti);
                std::sort(su.begin(), su.end());
                std::vector<int> tm;
                for (std::size_t j = 0; j < t.elems.size(); ++j)
                    if (j != i) tm.push_back(t.elems[j]);
                int sign = ((static_cast<int>(i) + greater) % 2 == 0) ? 1 : -1;
                rel = rel + (var(su) * var(tm)).scaled(sign);
            }
            if (rel.is_zero()) continue;
            rel = rel.primitive_part();
            std::string key = rel.to_string();
            if (!seen[key]) {
                seen[key] = true;
                out.push_back(rel);
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Straightening through the Grassmannian of (X | Id).
// ---------------------------------------------------------------------------

namespace {

// Sorts a column list with its permutation sign; zero on repeats.
int sort_signed(std::vector<int>& v) {
    int sign = 1;
    for (std::size_t i = 1; i < v.size(); ++i)
        for (std::size_t j = i; j > 0 && v[j] < v[j - 1]; --j) {
            std::swap(v[j], v[j - 1]);
            sign = -sign;
        }
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] == v[i + 1]) return 0;
    return sign;
}

using PluckerKey = std::vector<std::vector<int>>;  // rows sorted lex, entries sorted
using PluckerSum = std::map<PluckerKey, mpz_class>;

void add_plucker(PluckerSum& sum, const PluckerKey& k, const mpz_class& c) {
    auto it = sum.find(k);
    if (it == sum.end()) {
        if (c != 0) sum.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second == 0) sum.erase(it);
}

// The minor (A|B) of the d1 x d2 matrix X embeds as a maximal minor of the
// bordered matrix (X | J) where J has the unit column of row j at position
// d2 + (d1 + 1 - j). The reversed unit block is what makes bitableau
// standardness coincide with componentwise-nondecreasing Plucker rows.
//
// Laplace-expanding the unit columns of det (X|J)[., C] leaves det X[A, B]
// times a sign; the unit columns occupy a suffix of the sorted column list,
// so the expansion is a right-to-left cofactor walk.
int expansion_sign(const std::vector<int>& sorted_cols, int d1, int d2) {
    std::vector<int> live_rows;
    for (int i = 1; i <= d1; ++i) live_rows.push_back(i);
    int sign = 1;
    std::size_t len = sorted_cols.size();
    for (std::size_t idx = sorted_cols.size(); idx > 0; --idx) {
        int c = sorted_cols[idx - 1];
        if (c <= d2) break;
        int j = d1 + 1 - (c - d2);
        std::size_t q = len;  // unit columns form the suffix, so the rightmost is last
        std::size_t p =
            std::find(live_rows.begin(), live_rows.end(), j) - live_rows.begin() + 1;
        if (p > live_rows.size()) throw std::logic_error("expansion_sign: bad unit column");
        if ((p + q) % 2 == 1) sign = -sign;
        live_rows.erase(live_rows.begin() + (p - 1));
        --len;
    }
    return sign;
}

struct Embedded {
    std::vector<int> cols;
    int sign;
};

Embedded embed_minor(const std::vector<int>& a, const std::vector<int>& b, int d1, int d2) {
    Embedded e;
    e.cols = b;
    for (int j = d1; j >= 1; --j)
        if (std::find(a.begin(), a.end(), j) == a.end()) e.cols.push_back(d2 + (d1 + 1 - j));
    e.sign = expansion_sign(e.cols, d1, d2);
    return e;
}

// Inverse of embed_minor on a sorted maximal-minor column set.
struct SplitMinor {
    std::vector<int> a, b;
    int sign;
};

SplitMinor split_minor(const std::vector<int>& cols, int d1, int d2) {
    SplitMinor s;
    std::vector<int> acomp;
    for (int c : cols) {
        if (c <= d2) {
            s.b.push_back(c);
        } else {
            acomp.push_back(d1 + 1 - (c - d2));
        }
    }
    for (int j = 1; j <= d1; ++j)
        if (std::find(acomp.begin(), acomp.end(), j) == acomp.end()) s.a.push_back(j);
    s.sign = expansion_sign(cols, d1, d2);
    return s;
}

// One straightening pass on a product of maximal-minor rows.
// Returns false when the term is already standard.
bool straighten_term_once(const PluckerKey& key, PluckerSum& out_queue) {
    for (std::size_t a = 0; a + 1 < key.size(); ++a) {
        const auto& top = key[a];
        const auto& bot = key[a + 1];
        for (std::size_t j = 0; j < bot.size(); ++j) {
            if (top[j] <= bot[j]) continue;
            // Quadratic exchange on the j-suffix of top and the j-prefix of bot.
            std::size_t k = top.size();
            std::vector<int> alpha(top.begin(), top.begin() + j);
            std::vector<int> beta(top.begin() + j, top.end());
            std::vector<int> gamma(bot.begin(), bot.begin() + j + 1);
            std::vector<int> delta(bot.begin() + j + 1, bot.end());
            std::vector<int> z = beta;
            z.insert(z.end(), gamma.begin(), gamma.end());
            std::size_t take = k - j;  // size of the block returning to the top row
            std::vector<int> pick(take);
            // Original split = the first `take` positions of z; every other
            // split moves to the right-hand side with the shuffle sign.
            std::function<void(std::size_t, std::size_t)> enumerate = [&](std::size_t start,
                                                                          std::size_t depth) {
                if (depth == take) {
                    bool original = true;
                    for (std::size_t t = 0; t < take; ++t)
                        if (pick[t] != static_cast<int>(t)) original = false;
                    if (original) return;
                    std::vector<bool> used(z.size(), false);
                    for (int p : pick) used[p] = true;
                    long inv = 0;
                    for (int p : pick)
                        for (int q = 0; q < p; ++q)
                            if (!used[q]) ++inv;
                    std::vector<int> new_top = alpha;
                    for (int p : pick) new_top.push_back(z[p]);
                    std::vector<int> new_bot;
                    for (std::size_t q = 0; q < z.size(); ++q)
                        if (!used[q]) new_bot.push_back(z[q]);
                    new_bot.insert(new_bot.end(), delta.begin(), delta.end());
                    int sgn = (inv % 2 == 0) ? 1 : -1;
                    int s1 = sort_signed(new_top);
                    int s2 = sort_signed(new_bot);
                    if (s1 == 0 || s2 == 0) return;
                    PluckerKey nk = key;
                    nk[a] = new_top;
                    nk[a + 1] = new_bot;
                    std::sort(nk.begin(), nk.end());
                    // orig = -sum of the others
                    add_plucker(out_queue, nk, mpz_class(-sgn * s1 * s2));
                    return;
                }
                for (std::size_t p = start; p + (take - depth) <= z.size(); ++p) {
                    pick[depth] = static_cast<int>(p);
                    enumerate(p + 1, depth + 1);
                }
            };
            enumerate(0, 0);
            return true;
        }
    }
    return false;
}

PluckerSum straighten_plucker(PluckerSum input) {
    PluckerSum done;
    long safety = 0;
    while (!input.empty()) {
        if (++safety > 2'000'000)
            throw std::runtime_error("straighten: rewrite limit exceeded");
        auto it = input.begin();
        PluckerKey key = it->first;
        mpz_class coeff = it->second;
        input.erase(it);
        PluckerSum rewritten;
        if (!straighten_term_once(key, rewritten)) {
            add_plucker(done, key, coeff);
            continue;
        }
        for (const auto& [k, c] : rewritten) add_plucker(input, k, coeff * c);
    }
    return done;
}

}  // namespace

BitableauSum straighten(const BitableauSum& input, int d1, int d2) {
    // Translate to Plucker products of (X | Id).
    PluckerSum work;
    for (const auto& [bt, coeff] : input) {
        mpz_class c = coeff;
        PluckerKey key;
        bool zero = false;
        for (std::size_t a = 0; a < bt.left.rows.size() && !zero; ++a) {
            std::vector<int> rows = bt.left.rows[a];
            std::vector<int> cols = bt.right.rows[a];
            if (rows.size() != cols.size())
                throw std::invalid_argument("straighten: row/column lists differ in size");
            for (int r : rows)
                if (r < 1 || r > d1) throw std::invalid_argument("straighten: row index out of bounds");
            for (int cc : cols)
                if (cc < 1 || cc > d2)
                    throw std::invalid_argument("straighten: column index out of bounds");
            if (rows.empty()) continue;
            int s1 = sort_signed(rows);
            int s2 = sort_signed(cols);
            if (s1 == 0 || s2 == 0) {
                zero = true;
                break;
            }
            Embedded e = embed_minor(rows, cols, d1, d2);
            c *= s1 * s2 * e.sign;
            key.push_back(e.cols);
        }
        if (zero) continue;
        std::sort(key.begin(), key.end());
        add_plucker(work, key, c);
    }

    PluckerSum standard = straighten_plucker(std::move(work));

    BitableauSum out;
    for (const auto& [key, coeff] : standard) {
        mpz_class c = coeff;
        std::vector<std::vector<int>> lrows, rrows;
        for (const auto& cols : key) {
            SplitMinor s = split_minor(cols, d1, d2);
            c *= s.sign;
            if (s.a.empty()) continue;  // constant factor (the full identity block)
            lrows.push_back(s.a);
            rrows.push_back(s.b);
        }
        // Rows come out with non-increasing widths; keep partition order.
        std::vector<std::size_t> idx(lrows.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
            if (lrows[i].size() != lrows[j].size()) return lrows[i].size() > lrows[j].size();
            if (lrows[i] != lrows[j]) return lrows[i] < lrows[j];
            return rrows[i] < rrows[j];
        });
        std::vector<std::vector<int>> l2, r2;
        for (std::size_t i : idx) {
            l2.push_back(lrows[i]);
            r2.push_back(rrows[i]);
        }
        add_to(out, Bitableau(Tableau(std::move(l2)), Tableau(std::move(r2))), c);
    }
    return out;
}

BitableauSum straighten(const Bitableau& bt, int d1, int d2) {
    BitableauSum s;
    add_to(s, bt, 1);
    return straighten(s, d1, d2);
}

}  // namespace persalg
