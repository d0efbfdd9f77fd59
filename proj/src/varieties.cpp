#include "persalg/varieties.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace persalg {

void MinorSymbol::validate(const RankedFormat& fmt) const {
    if (level < 1 || level > fmt.levels())
        throw std::invalid_argument("MinorSymbol: level out of range");
    if (size() > fmt.ranks[level - 1])
        throw std::invalid_argument("MinorSymbol: size exceeds the rank bound");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i + 1 < rows.size() && (rows[i] >= rows[i + 1] || cols[i] >= cols[i + 1]))
            throw std::invalid_argument("MinorSymbol: index sets must be strictly increasing");
    }
    if (rows.front() < 1 || rows.back() > fmt.dims[level - 1] || cols.front() < 1 ||
        cols.back() > fmt.dims[level])
        throw std::invalid_argument("MinorSymbol: index out of bounds");
}

std::string MinorSymbol::to_string() const {
    std::ostringstream out;
    out << "<";
    for (std::size_t i = 0; i < rows.size(); ++i) out << (i ? "," : "") << rows[i];
    out << "|";
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
    out << ">_" << level;
    return out.str();
}

PartialCmp subset_partial_order(const std::vector<int>& a, const std::vector<int>& b) {
    auto leq = [](const std::vector<int>& x, const std::vector<int>& y) {
        if (x.size() > y.size()) return false;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] < y[i]) return false;
        return true;
    };
    bool ab = leq(a, b), ba = leq(b, a);
    if (ab && ba) return PartialCmp::Equal;
    if (ab) return PartialCmp::Less;
    if (ba) return PartialCmp::Greater;
    return PartialCmp::Incomparable;
}

int subset_total_order(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;  // bigger entry = smaller set
    return 0;
}

int symbol_total_order(const MinorSymbol& a, const MinorSymbol& b) {
    if (a.level != b.level)
        throw std::invalid_argument("symbol_total_order: symbols from different levels");
    int c = subset_total_order(a.rows, b.rows);
    if (c != 0) return c;
    return subset_total_order(a.cols, b.cols);
}

PartialCmp symbol_partial_order(const MinorSymbol& a, const MinorSymbol& b) {
    if (a.level != b.level)
        throw std::invalid_argument("symbol_partial_order: symbols from different levels");
    PartialCmp ra = subset_partial_order(a.rows, b.rows);
    PartialCmp rb = subset_partial_order(a.cols, b.cols);
    if (ra == PartialCmp::Equal && rb == PartialCmp::Equal) return PartialCmp::Equal;
    auto leq = [](PartialCmp c) { return c == PartialCmp::Less || c == PartialCmp::Equal; };
    auto geq = [](PartialCmp c) { return c == PartialCmp::Greater || c == PartialCmp::Equal; };
    if (leq(ra) && leq(rb)) return PartialCmp::Less;
    if (geq(ra) && geq(rb)) return PartialCmp::Greater;
    return PartialCmp::Incomparable;
}

SymbolMonomial SymbolMonomial::from_symbols(const RankedFormat& fmt,
                                            const std::vector<MinorSymbol>& symbols) {
    SymbolMonomial m(fmt.levels());
    for (const auto& s : symbols) {
        s.validate(fmt);
        m.per_level[s.level - 1].push_back(s);
    }
    for (auto& lv : m.per_level)
        std::sort(lv.begin(), lv.end(), [](const MinorSymbol& a, const MinorSymbol& b) {
            return symbol_total_order(a, b) > 0;  // descending
        });
    return m;
}

std::string SymbolMonomial::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& lv : per_level)
        for (const auto& s : lv) {
            if (!first) out << "*";
            out << s.to_string();
            first = false;
        }
    if (first) out << "1";
    return out.str();
}

SymbolMonomial SymbolMonomial::parse(const RankedFormat& fmt, const std::string& text) {
    std::vector<MinorSymbol> symbols;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t open = text.find('<', pos);
        if (open == std::string::npos) break;
        std::size_t bar = text.find('|', open);
        std::size_t close = text.find('>', open);
        std::size_t underscore = text.find('_', close);
        if (bar == std::string::npos || close == std::string::npos ||
            underscore == std::string::npos)
            throw std::invalid_argument("SymbolMonomial::parse: malformed symbol");
        auto parse_list = [](const std::string& s) {
            std::vector<int> out;
            std::string num;
            for (char ch : s) {
                if (std::isdigit(static_cast<unsigned char>(ch))) {
                    num.push_back(ch);
                } else if (ch == ',') {
                    out.push_back(std::stoi(num));
                    num.clear();
                } else if (!std::isspace(static_cast<unsigned char>(ch))) {
                    throw std::invalid_argument("SymbolMonomial::parse: bad index list");
                }
            }
            if (!num.empty()) out.push_back(std::stoi(num));
            return out;
        };
        std::size_t lvl_end = underscore + 1;
        while (lvl_end < text.size() && std::isdigit(static_cast<unsigned char>(text[lvl_end])))
            ++lvl_end;
        int level = std::stoi(text.substr(underscore + 1, lvl_end - underscore - 1));
        symbols.emplace_back(level, parse_list(text.substr(open + 1, bar - open - 1)),
                             parse_list(text.substr(bar + 1, close - bar - 1)));
        pos = lvl_end;
    }
    return from_symbols(fmt, symbols);
}

bool SymbolMonomial::operator==(const SymbolMonomial& o) const {
    if (per_level.size() != o.per_level.size()) return false;
    for (std::size_t k = 0; k < per_level.size(); ++k) {
        if (per_level[k].size() != o.per_level[k].size()) return false;
        for (std::size_t i = 0; i < per_level[k].size(); ++i)
            if (!(per_level[k][i] == o.per_level[k][i])) return false;
    }
    return true;
}

int symbol_monomial_order(const SymbolMonomial& a, const SymbolMonomial& b) {
    std::size_t levels = std::max(a.per_level.size(), b.per_level.size());
    for (std::size_t k = 0; k < levels; ++k) {
        static const std::vector<MinorSymbol> none;
        const auto& la = k < a.per_level.size() ? a.per_level[k] : none;
        const auto& lb = k < b.per_level.size() ? b.per_level[k] : none;
        if (la.size() != lb.size()) return la.size() < lb.size() ? -1 : 1;
        // Reverse-lexicographic on the level: walk the symbols from the
        // smallest upward; the first discrepancy with a smaller exponent wins.
        // With sorted multisets this amounts to comparing the reversed lists.
        std::vector<const MinorSymbol*> ra, rb;
        for (auto it = la.rbegin(); it != la.rend(); ++it) ra.push_back(&*it);
        for (auto it = lb.rbegin(); it != lb.rend(); ++it) rb.push_back(&*it);
        for (std::size_t i = 0; i < ra.size(); ++i) {
            int c = symbol_total_order(*ra[i], *rb[i]);
            if (c != 0) return c > 0 ? 1 : -1;
        }
    }
    return 0;
}

std::vector<Tableau> tableau_of(const SymbolMonomial& m, const RankedFormat& fmt) {
    int n = fmt.levels();
    if (static_cast<int>(m.per_level.size()) != n)
        throw std::invalid_argument("tableau_of: monomial does not match the format");
    std::vector<Tableau> factors;

    auto complement = [](const std::vector<int>& set, int ambient) {
        std::vector<int> out;
        std::size_t k = 0;
        for (int v = 1; v <= ambient; ++v) {
            if (k < set.size() && set[k] == v) {
                ++k;
            } else {
                out.push_back(v);
            }
        }
        return out;
    };

    // Factor 0: the level-1 row sets.
    {
        std::vector<std::vector<int>> rows;
        for (const auto& s : m.per_level[0]) rows.push_back(s.rows);
        factors.emplace_back(std::move(rows));
    }
    // Factors 1..N-1: reversed complements of level-k columns over the
    // level-(k+1) rows.
    for (int k = 1; k < n; ++k) {
        std::vector<std::vector<int>> rows;
        const auto& lv = m.per_level[k - 1];
        for (auto it = lv.rbegin(); it != lv.rend(); ++it)
            rows.push_back(complement(it->cols, fmt.dims[k]));
        for (const auto& s : m.per_level[k]) rows.push_back(s.rows);
        factors.emplace_back(std::move(rows));
    }
    // Last factor: the level-N columns, full intervals dropped, the rest
    // complemented in reverse order.
    {
        const auto& lv = m.per_level[n - 1];
        int dn = fmt.dims[n];
        std::vector<std::vector<int>> rows;
        for (auto it = lv.rbegin(); it != lv.rend(); ++it) {
            if (static_cast<int>(it->cols.size()) == dn) continue;  // the full interval
            rows.push_back(complement(it->cols, dn));
        }
        factors.emplace_back(std::move(rows));
    }
    return factors;
}

namespace {

// Standardness for a factor that may carry empty rows: the row lengths must
// be non-increasing (an empty row above a filled one breaks the shape), rows
// strictly increase and columns never decrease.
bool factor_standard(const Tableau& t) {
    if (!t.valid_shape()) return false;
    for (const auto& r : t.rows)
        for (std::size_t j = 0; j + 1 < r.size(); ++j)
            if (r[j] >= r[j + 1]) return false;
    for (std::size_t i = 0; i + 1 < t.rows.size(); ++i)
        for (std::size_t j = 0; j < t.rows[i + 1].size(); ++j)
            if (t.rows[i][j] > t.rows[i + 1][j]) return false;
    return true;
}

}  // namespace

MonomialClass classify_monomial(const SymbolMonomial& m, const RankedFormat& fmt) {
    for (const auto& f : tableau_of(m, fmt))
        if (!factor_standard(f)) return MonomialClass::NonstandardTableau;
    for (int k = 1; k <= fmt.levels(); ++k)
        for (const auto& s : m.per_level[k - 1])
            if (s.size() == fmt.ranks[k - 1]) return MonomialClass::NonstandardVmax;
    return MonomialClass::Standard;
}

bool is_standard_monomial(const SymbolMonomial& m, const RankedFormat& fmt) {
    return classify_monomial(m, fmt) == MonomialClass::Standard;
}

bool initial_ideal_member(const SymbolMonomial& m, const RankedFormat& fmt) {
    return !is_standard_monomial(m, fmt);
}

bool is_standard_multi(const std::vector<SymbolMonomial>& ms,
                       const std::vector<RankedFormat>& fmts) {
    if (ms.size() != fmts.size())
        throw std::invalid_argument("is_standard_multi: misaligned colors");
    for (std::size_t i = 0; i < ms.size(); ++i)
        if (!is_standard_monomial(ms[i], fmts[i])) return false;
    return true;
}

std::vector<MinorSymbol> symbol_pool(const RankedFormat& fmt) {
    std::vector<MinorSymbol> pool;
    for (int k = 1; k <= fmt.levels(); ++k) {
        std::vector<MinorSymbol> level;
        for (int s = 1; s <= fmt.ranks[k - 1]; ++s) {
            for (const auto& a : subsets_colex(fmt.dims[k - 1], s))
                for (const auto& b : subsets_colex(fmt.dims[k], s))
                    level.emplace_back(k, a.elems, b.elems);
        }
        std::sort(level.begin(), level.end(), [](const MinorSymbol& a, const MinorSymbol& b) {
            return symbol_total_order(a, b) < 0;
        });
        pool.insert(pool.end(), level.begin(), level.end());
    }
    return pool;
}

std::vector<SymbolMonomial> enumerate_standard(const RankedFormat& fmt, int degree, long cap) {
    auto pool = symbol_pool(fmt);
    std::vector<SymbolMonomial> out;
    std::vector<MinorSymbol> current;
    long visited = 0;
    // Multisets over the pool with total size = degree.
    std::function<void(std::size_t, int)> rec = [&](std::size_t start, int remaining) {
        if (++visited > cap) throw std::runtime_error("enumerate_standard: cap exceeded");
        if (remaining == 0) {
            SymbolMonomial m = SymbolMonomial::from_symbols(fmt, current);
            if (is_standard_monomial(m, fmt)) out.push_back(std::move(m));
            return;
        }
        for (std::size_t i = start; i < pool.size(); ++i) {
            if (pool[i].size() > remaining) continue;
            current.push_back(pool[i]);
            rec(i, remaining - pool[i].size());
            current.pop_back();
        }
    };
    rec(0, degree);
    std::sort(out.begin(), out.end(), [](const SymbolMonomial& a, const SymbolMonomial& b) {
        return symbol_monomial_order(a, b) < 0;
    });
    return out;
}

std::vector<std::vector<MinorSymbol>> delta_complex_faces(const RankedFormat& fmt, int max_card,
                                                          long cap) {
    auto pool = symbol_pool(fmt);
    std::vector<std::vector<MinorSymbol>> faces;
    std::vector<MinorSymbol> current;
    long visited = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (++visited > cap) throw std::runtime_error("delta_complex_faces: cap exceeded");
        faces.push_back(current);
        if (static_cast<int>(current.size()) == max_card) return;
        for (std::size_t i = start; i < pool.size(); ++i) {
            current.push_back(pool[i]);
            if (is_standard_monomial(SymbolMonomial::from_symbols(fmt, current), fmt)) rec(i + 1);
            current.pop_back();
        }
    };
    rec(0);
    return faces;
}

DegenerationCmp degeneration_order(const RankedFormat& a, const RankedFormat& b) {
    if (a.dims != b.dims)
        throw std::invalid_argument("degeneration_order: dimension vectors differ");
    DegenerationCmp out;
    bool le = true, ge = true;
    for (std::size_t i = 0; i < a.ranks.size(); ++i) {
        if (a.ranks[i] > b.ranks[i]) le = false;
        if (a.ranks[i] < b.ranks[i]) ge = false;
        out.meet.push_back(std::min(a.ranks[i], b.ranks[i]));
    }
    out.cmp = le && ge   ? PartialCmp::Equal
              : le       ? PartialCmp::Less
              : ge       ? PartialCmp::Greater
                         : PartialCmp::Incomparable;
    return out;
}

std::vector<std::vector<int>> maximal_rank_sequences(const std::vector<int>& dims) {
    if (dims.size() < 2) throw std::invalid_argument("maximal_rank_sequences: need a format");
    int n = static_cast<int>(dims.size()) - 1;
    std::vector<std::vector<int>> all;
    std::vector<int> r(n, 0);
    std::function<void(int)> rec = [&](int k) {
        if (k == n) {
            all.push_back(r);
            return;
        }
        int hi = std::min(dims[k], dims[k + 1]);
        if (k == 0) hi = std::min(hi, dims[0]);
        for (int v = 0; v <= hi; ++v) {
            if (k > 0 && r[k - 1] + v > dims[k]) continue;
            r[k] = v;
            rec(k + 1);
        }
        r[k] = 0;
    };
    rec(0);
    std::vector<std::vector<int>> maximal;
    for (const auto& cand : all) {
        bool dominated = false;
        for (const auto& other : all) {
            if (other == cand) continue;
            bool ge = true, strict = false;
            for (int i = 0; i < n; ++i) {
                if (other[i] < cand[i]) ge = false;
                if (other[i] > cand[i]) strict = true;
            }
            if (ge && strict) dominated = true;
        }
        if (!dominated) maximal.push_back(cand);
    }
    return maximal;
}

ComplexVarietyIdeal coordinate_ring_ideal(const RankedFormat& fmt) {
    ComplexVarietyIdeal out;
    int total = 0;
    for (int k = 1; k <= fmt.levels(); ++k) total += fmt.dims[k - 1] * fmt.dims[k];
    out.ring = make_ring(total);
    int offset = 0;
    for (int k = 1; k <= fmt.levels(); ++k) {
        out.mats.push_back(generic_matrix(out.ring, offset, fmt.dims[k - 1], fmt.dims[k]));
        offset += fmt.dims[k - 1] * fmt.dims[k];
    }
    for (std::size_t k = 0; k + 1 < out.mats.size(); ++k) {
        PolyMatrix prod = out.mats[k] * out.mats[k + 1];
        for (int i = 0; i < prod.rows(); ++i)
            for (int j = 0; j < prod.cols(); ++j)
                if (!prod.at(i, j).is_zero()) out.gens.push_back(prod.at(i, j));
    }
    for (int k = 1; k <= fmt.levels(); ++k) {
        int rk = fmt.ranks[k - 1];
        if (rk >= 1 && rk <= std::min(fmt.dims[k - 1], fmt.dims[k]))
            for (auto& g : minors_ideal(rk, out.mats[k - 1])) out.gens.push_back(std::move(g));
    }
    return out;
}

}  // namespace persalg
