#include "persalg/polymatrix.hpp"

#include <nlohmann/json.hpp>
#include <random>
#include <sstream>

#include "persalg/parallel.hpp"

namespace persalg {

using json = nlohmann::json;

std::vector<SubsetIndex> subsets_colex(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("subsets_colex: k out of range");
    std::vector<SubsetIndex> out;
    if (k == 0) {
        out.emplace_back();
        return out;
    }
    // Colex: recurse on the largest element.
    for (int last = k; last <= n; ++last) {
        for (const auto& head : subsets_colex(last - 1, k - 1)) {
            std::vector<int> v = head.elems;
            v.push_back(last);
            out.emplace_back(std::move(v));
        }
    }
    return out;
}

int concat_sign(const std::vector<int>& a, const std::vector<int>& b) {
    long inv = 0;
    for (int x : a)
        for (int y : b) {
            if (x == y) return 0;
            if (x > y) ++inv;
        }
    return inv % 2 == 0 ? 1 : -1;
}

PolyMatrix::PolyMatrix(RingPtr ring, int rows, int cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
    if (rows_ < 0 || cols_ < 0) throw std::invalid_argument("PolyMatrix: negative shape");
    entries_.assign(static_cast<std::size_t>(rows_) * cols_, Polynomial::zero(ring_));
}

PolyMatrix PolyMatrix::identity(RingPtr ring, int n) {
    PolyMatrix m(ring, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, Polynomial::constant(ring, 1));
    return m;
}

PolyMatrix PolyMatrix::from_entries(RingPtr ring, const std::vector<std::vector<Polynomial>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    PolyMatrix m(std::move(ring), r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw std::invalid_argument("PolyMatrix::from_entries: ragged rows");
        for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

PolyMatrix PolyMatrix::from_strings(RingPtr ring, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::vector<Polynomial>> parsed;
    parsed.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<Polynomial> prow;
        prow.reserve(row.size());
        for (const auto& s : row) prow.push_back(Polynomial::parse(ring, s));
        parsed.push_back(std::move(prow));
    }
    return from_entries(std::move(ring), parsed);
}

void PolyMatrix::set(int r, int c, Polynomial p) {
    require_same_ring(ring_, p.ring(), "PolyMatrix::set");
    entries_[idx(r, c)] = std::move(p);
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix m(ring_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.set(j, i, at(i, j));
    if (row_shifts) m.col_shifts = row_shifts;
    if (col_shifts) m.row_shifts = col_shifts;
    return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    require_same_ring(ring_, o.ring_, "PolyMatrix::mul");
    if (cols_ != o.rows_) throw std::invalid_argument("PolyMatrix::mul: shape mismatch");
    PolyMatrix m(ring_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) {
            Polynomial acc = Polynomial::zero(ring_);
            for (int k = 0; k < cols_; ++k) acc = acc + at(i, k) * o.at(k, j);
            m.set(i, j, std::move(acc));
        }
    return m;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    require_same_ring(ring_, o.ring_, "PolyMatrix::add");
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("PolyMatrix::add: shape mismatch");
    PolyMatrix m(ring_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.set(i, j, at(i, j) + o.at(i, j));
    return m;
}

PolyMatrix PolyMatrix::operator-() const {
    PolyMatrix m(ring_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.set(i, j, -at(i, j));
    return m;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (!(entries_[i] == o.entries_[i])) return false;
    return true;
}

bool PolyMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

PolyMatrix PolyMatrix::scaled(const Polynomial& f) const {
    PolyMatrix m(ring_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.set(i, j, at(i, j) * f);
    return m;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<int>& rs, const std::vector<int>& cs) const {
    PolyMatrix m(ring_, static_cast<int>(rs.size()), static_cast<int>(cs.size()));
    for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = 0; j < cs.size(); ++j)
            m.set(static_cast<int>(i), static_cast<int>(j), at(rs[i] - 1, cs[j] - 1));
    return m;
}

namespace {

Polynomial det_expand(const PolyMatrix& m, std::vector<int> rows, std::vector<int> cols) {
    const RingPtr& R = m.ring();
    std::size_t n = rows.size();
    if (n == 0) return Polynomial::constant(R, 1);
    if (n == 1) return m.at(rows[0], cols[0]);
    // Expand along the column with the most zero entries.
    std::size_t best = 0, best_zeros = 0;
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t z = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (m.at(rows[i], cols[j]).is_zero()) ++z;
        if (z > best_zeros) {
            best_zeros = z;
            best = j;
        }
    }
    std::vector<int> subcols;
    for (std::size_t j = 0; j < n; ++j)
        if (j != best) subcols.push_back(cols[j]);
    Polynomial acc = Polynomial::zero(R);
    for (std::size_t i = 0; i < n; ++i) {
        const Polynomial& e = m.at(rows[i], cols[best]);
        if (e.is_zero()) continue;
        std::vector<int> subrows;
        for (std::size_t k = 0; k < n; ++k)
            if (k != i) subrows.push_back(rows[k]);
        Polynomial cofactor = det_expand(m, std::move(subrows), subcols);
        Polynomial contrib = e * cofactor;
        if ((i + best) % 2 == 1) contrib = -contrib;
        acc = acc + contrib;
    }
    return acc;
}

}  // namespace

Polynomial PolyMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("PolyMatrix::det: not square");
    std::vector<int> rs(rows_), cs(cols_);
    for (int i = 0; i < rows_; ++i) rs[i] = i;
    for (int j = 0; j < cols_; ++j) cs[j] = j;
    return det_expand(*this, std::move(rs), std::move(cs));
}

Polynomial PolyMatrix::minor_det(const SubsetIndex& rows, const SubsetIndex& cols) const {
    if (rows.size() != cols.size())
        throw std::invalid_argument("PolyMatrix::minor_det: index sizes differ");
    std::vector<int> rs, cs;
    for (int r : rows.elems) rs.push_back(r - 1);
    for (int c : cols.elems) cs.push_back(c - 1);
    return det_expand(*this, std::move(rs), std::move(cs));
}

std::vector<std::vector<mpz_class>> PolyMatrix::evaluate(const std::vector<mpz_class>& point) const {
    std::vector<std::vector<mpz_class>> out(rows_, std::vector<mpz_class>(cols_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out[i][j] = at(i, j).evaluate(point);
    return out;
}

std::string PolyMatrix::to_string() const {
    std::ostringstream ss;
    for (int i = 0; i < rows_; ++i) {
        ss << "|";
        for (int j = 0; j < cols_; ++j) ss << " " << at(i, j).to_string();
        ss << " |";
        if (i + 1 < rows_) ss << "\n";
    }
    return ss.str();
}

std::string PolyMatrix::to_json() const {
    json j;
    j["rows"] = rows_;
    j["cols"] = cols_;
    json ring;
    ring["vars"] = ring_->nvars();
    ring["coeffs"] = ring_->is_field() ? "ZZ/" + std::to_string(ring_->prime()) : "ZZ";
    ring["names"] = ring_->names();
    j["ring"] = ring;
    json ent = json::array();
    for (int i = 0; i < rows_; ++i) {
        json row = json::array();
        for (int jj = 0; jj < cols_; ++jj) row.push_back(at(i, jj).to_string());
        ent.push_back(row);
    }
    j["entries"] = ent;
    if (row_shifts) j["row_shifts"] = *row_shifts;
    if (col_shifts) j["col_shifts"] = *col_shifts;
    return j.dump(2);
}

PolyMatrix PolyMatrix::from_json(const std::string& text) {
    json j = json::parse(text);
    int nvars = j.at("ring").at("vars").get<int>();
    CoeffDomain dom = CoeffDomain::Integers;
    long p = 0;
    if (j.at("ring").contains("coeffs")) {
        std::string c = j["ring"]["coeffs"].get<std::string>();
        if (c.rfind("ZZ/", 0) == 0) {
            dom = CoeffDomain::PrimeField;
            p = std::stol(c.substr(3));
        } else if (c != "ZZ") {
            throw std::invalid_argument("matrix json: unknown coefficient domain " + c);
        }
    }
    std::vector<std::string> names;
    if (j["ring"].contains("names")) names = j["ring"]["names"].get<std::vector<std::string>>();
    RingPtr ring = make_ring(nvars, dom, p, names);
    auto entries = j.at("entries").get<std::vector<std::vector<std::string>>>();
    PolyMatrix m = PolyMatrix::from_strings(ring, entries);
    if (static_cast<int>(entries.size()) != j.at("rows").get<int>())
        throw std::invalid_argument("matrix json: row count mismatch");
    if (j.contains("row_shifts")) m.row_shifts = j["row_shifts"].get<std::vector<std::vector<int>>>();
    if (j.contains("col_shifts")) m.col_shifts = j["col_shifts"].get<std::vector<std::vector<int>>>();
    return m;
}

PolyMatrix generic_matrix(const RingPtr& ring, int start_var, int nrows, int ncols) {
    if (start_var < 0 || start_var + nrows * ncols > ring->nvars())
        throw std::invalid_argument("generic_matrix: not enough variables in the ring");
    PolyMatrix m(ring, nrows, ncols);
    int v = start_var;
    for (int j = 0; j < ncols; ++j)
        for (int i = 0; i < nrows; ++i) m.set(i, j, Polynomial::variable(ring, v++));
    return m;
}

PolyMatrix exterior_power(int k, const PolyMatrix& a) {
    if (k < 0 || k > std::min(a.rows(), a.cols()))
        throw std::invalid_argument("exterior_power: k out of range");
    auto rsubs = subsets_colex(a.rows(), k);
    auto csubs = subsets_colex(a.cols(), k);
    PolyMatrix m(a.ring(), static_cast<int>(rsubs.size()), static_cast<int>(csubs.size()));
    std::size_t total = rsubs.size() * csubs.size();
    std::vector<Polynomial> slots(total, Polynomial::zero(a.ring()));
    parallel_for(total, [&](std::size_t t) {
        std::size_t i = t / csubs.size(), j = t % csubs.size();
        slots[t] = a.minor_det(rsubs[i], csubs[j]);
    });
    for (std::size_t i = 0; i < rsubs.size(); ++i)
        for (std::size_t j = 0; j < csubs.size(); ++j)
            m.set(static_cast<int>(i), static_cast<int>(j), std::move(slots[i * csubs.size() + j]));
    return m;
}

std::vector<Polynomial> minors_ideal(int r, const PolyMatrix& a) {
    if (r < 1 || r > std::min(a.rows(), a.cols()))
        throw std::invalid_argument("minors_ideal: size out of range");
    PolyMatrix w = exterior_power(r, a);
    std::vector<Polynomial> out;
    out.reserve(static_cast<std::size_t>(w.rows()) * w.cols());
    for (int i = 0; i < w.rows(); ++i)
        for (int j = 0; j < w.cols(); ++j) out.push_back(w.at(i, j));
    return out;
}

int rank(const PolyMatrix& a) {
    int bound = std::min(a.rows(), a.cols());
    if (bound == 0) return 0;
    // Random integer evaluations give a certified lower bound; a vanishing
    // exterior power certifies the upper bound.
    std::mt19937_64 rng(0x5eedULL);
    std::uniform_int_distribution<long> dist(-7, 7);
    int lower = 0;
    for (int trial = 0; trial < 4; ++trial) {
        std::vector<mpz_class> pt(a.ring()->nvars());
        for (auto& v : pt) v = dist(rng);
        auto ev = a.evaluate(pt);
        if (a.ring()->is_field()) {
            FieldZp f(a.ring()->prime());
            Mat<long> mm(ev.size());
            for (std::size_t i = 0; i < ev.size(); ++i)
                for (const auto& x : ev[i]) mm[i].push_back(f.from_int(x));
            lower = std::max<int>(lower, static_cast<int>(rank(f, std::move(mm))));
        } else {
            lower = std::max<int>(lower, static_cast<int>(rank_integer(ev)));
        }
        if (lower == bound) return bound;
    }
    for (int r = lower; r < bound; ++r) {
        // Is some (r+1)-minor nonzero?
        bool nonzero = false;
        for (const auto& rs : subsets_colex(a.rows(), r + 1)) {
            for (const auto& cs : subsets_colex(a.cols(), r + 1)) {
                if (!a.minor_det(rs, cs).is_zero()) {
                    nonzero = true;
                    break;
                }
            }
            if (nonzero) break;
        }
        if (!nonzero) return r;
    }
    return bound;
}

}  // namespace persalg
