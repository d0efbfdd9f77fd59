#include "persalg/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace persalg {

void Polynomial::normalize() {
    if (!ring_) throw std::invalid_argument("Polynomial: missing ring context");
    for (auto& t : terms_) {
        if (t.mono.nvars() != ring_->nvars())
            throw std::invalid_argument("Polynomial: monomial arity mismatch");
        t.coeff = ring_->normalize_coeff(t.coeff);
    }
    MonomialOrder o = ring_->order();
    std::sort(terms_.begin(), terms_.end(), [o](const Term& a, const Term& b) {
        return order_compare(o, a.mono, b.mono) > 0;
    });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().mono == t.mono) {
            merged.back().coeff = ring_->normalize_coeff(merged.back().coeff + t.coeff);
        } else {
            merged.push_back(std::move(t));
        }
    }
    terms_.clear();
    for (auto& t : merged)
        if (t.coeff != 0) terms_.push_back(std::move(t));
}

Polynomial Polynomial::constant(RingPtr ring, const mpz_class& c) {
    Polynomial p(ring);
    p.terms_.push_back({Monomial::one(ring->nvars()), c});
    p.normalize();
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, int i) {
    if (i < 0 || i >= ring->nvars()) throw std::invalid_argument("Polynomial::variable: index out of range");
    Polynomial p(ring);
    p.terms_.push_back({Monomial::var(ring->nvars(), i), 1});
    p.normalize();
    return p;
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, const mpz_class& c) {
    Polynomial p(ring);
    p.terms_.push_back({std::move(m), c});
    p.normalize();
    return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(ring);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

const Polynomial::Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading_term: zero polynomial");
    return terms_.front();
}

const Polynomial::Term& Polynomial::leading_term(MonomialOrder o) const {
    if (terms_.empty()) throw std::domain_error("leading_term: zero polynomial");
    if (o == ring_->order()) return terms_.front();
    const Term* best = &terms_.front();
    for (const auto& t : terms_)
        if (order_compare(o, t.mono, best->mono) > 0) best = &t;
    return *best;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_, "Polynomial::add");
    // Merge of two descending term lists.
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    MonomialOrder ord = ring_->order();
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = order_compare(ord, terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            mpz_class s = ring_->normalize_coeff(terms_[i].coeff + o.terms_[j].coeff);
            if (s != 0) r.terms_.push_back({terms_[i].mono, s});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, ring_->normalize_coeff(-t.coeff)});
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_, "Polynomial::mul");
    Polynomial r(ring_);
    if (terms_.empty() || o.terms_.empty()) return r;
    r.terms_.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) r.terms_.push_back({a.mono * b.mono, a.coeff * b.coeff});
    r.normalize();
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_, "Polynomial::eq");
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
    return true;
}

Polynomial Polynomial::scaled(const mpz_class& c) const {
    Polynomial r(ring_);
    mpz_class cn = ring_->normalize_coeff(c);
    if (cn == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        mpz_class v = ring_->normalize_coeff(t.coeff * cn);
        if (v != 0) r.terms_.push_back({t.mono, v});
    }
    return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const mpz_class& c) const {
    Polynomial r(ring_);
    mpz_class cn = ring_->normalize_coeff(c);
    if (cn == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        mpz_class v = ring_->normalize_coeff(t.coeff * cn);
        if (v != 0) r.terms_.push_back({t.mono * m, v});
    }
    return r;  // multiplying by a monomial preserves descending order
}

static mpz_class modinv(const mpz_class& a, long p) {
    mpz_class r, pz(p);
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), pz.get_mpz_t()) == 0)
        throw std::domain_error("modinv: not invertible");
    return r;
}

std::optional<Polynomial> Polynomial::exact_divide(const Polynomial& divisor) const {
    require_same_ring(ring_, divisor.ring_, "Polynomial::exact_divide");
    if (divisor.is_zero()) return std::nullopt;
    Polynomial rem = *this;
    Polynomial quot(ring_);
    const Term& dl = divisor.leading_term();
    bool field = ring_->is_field();
    mpz_class dinv = field ? modinv(dl.coeff, ring_->prime()) : mpz_class(0);
    while (!rem.is_zero()) {
        const Term& rl = rem.leading_term();
        if (!dl.mono.divides(rl.mono)) return std::nullopt;
        mpz_class q;
        if (field) {
            q = ring_->normalize_coeff(rl.coeff * dinv);
        } else {
            mpz_class qz, rz;
            mpz_tdiv_qr(qz.get_mpz_t(), rz.get_mpz_t(), rl.coeff.get_mpz_t(), dl.coeff.get_mpz_t());
            if (rz != 0) return std::nullopt;
            q = qz;
        }
        Monomial qm = rl.mono.quotient(dl.mono);
        quot.terms_.push_back({qm, q});
        rem = rem - divisor.times_term(qm, q);
    }
    quot.normalize();
    return quot;
}

mpz_class Polynomial::content() const {
    mpz_class g = 0;
    for (const auto& t : terms_) {
        mpz_class a = abs(t.coeff);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Polynomial Polynomial::primitive_part() const {
    if (is_zero()) return *this;
    mpz_class g = content();
    if (terms_.front().coeff < 0) g = -g;
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff / g});
    return r;
}

mpz_class Polynomial::evaluate(const std::vector<mpz_class>& point) const {
    if (static_cast<int>(point.size()) != ring_->nvars())
        throw std::invalid_argument("Polynomial::evaluate: point length mismatch");
    mpz_class acc = 0;
    for (const auto& t : terms_) {
        mpz_class v = t.coeff;
        for (int i = 0; i < ring_->nvars(); ++i) {
            for (int e = 0; e < t.mono.exps[i]; ++e) v *= point[i];
        }
        acc += v;
    }
    return ring_->normalize_coeff(acc);
}

Polynomial Polynomial::substitute(const RingPtr& target, const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != ring_->nvars())
        throw std::invalid_argument("Polynomial::substitute: arity mismatch");
    for (const auto& im : images) require_same_ring(target, im.ring(), "Polynomial::substitute");
    Polynomial acc = Polynomial::zero(target);
    for (const auto& t : terms_) {
        Polynomial m = Polynomial::constant(target, t.coeff);
        for (int i = 0; i < ring_->nvars(); ++i)
            for (int e = 0; e < t.mono.exps[i]; ++e) m = m * images[i];
        acc = acc + m;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Text format: Macaulay2-like, e.g. -x_2*x_3+x_1*x_4, powers as x_1^2.
// ---------------------------------------------------------------------------

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms_) {
        mpz_class c = t.coeff;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? "-" : "+");
        }
        first = false;
        bool printed = false;
        if (c != 1 || t.mono.is_one()) {
            out << c.get_str();
            printed = true;
        }
        for (int i = 0; i < t.mono.nvars(); ++i) {
            int e = t.mono.exps[i];
            if (e == 0) continue;
            if (printed) out << "*";
            out << ring_->name(i);
            if (e > 1) out << "^" << e;
            printed = true;
        }
    }
    return out.str();
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    const RingCtx& ring;

    explicit Parser(const std::string& text, const RingCtx& r) : s(text), ring(r) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    mpz_class parse_int() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("polynomial parse: expected integer at position " + std::to_string(pos));
        return mpz_class(s.substr(start, pos - start));
    }

    // Longest-match variable lookup, so that x_10 beats x_1.
    int parse_var() {
        skip_ws();
        int best = -1;
        std::size_t best_len = 0;
        for (int i = 0; i < ring.nvars(); ++i) {
            const std::string& n = ring.name(i);
            if (n.size() > best_len && s.compare(pos, n.size(), n) == 0) {
                best = i;
                best_len = n.size();
            }
        }
        if (best >= 0) pos += best_len;
        return best;
    }

    // factor := integer | var ['^' integer]
    // term   := factor (['*'] factor)*
    bool parse_term(Monomial& mono, mpz_class& coeff) {
        bool any = false;
        for (;;) {
            skip_ws();
            if (pos >= s.size()) break;
            char c = s[pos];
            if (c == '*') {
                ++pos;
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff *= parse_int();
                any = true;
                continue;
            }
            int v = parse_var();
            if (v < 0) break;
            int e = 1;
            skip_ws();
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                e = static_cast<int>(parse_int().get_si());
                if (e < 0) throw std::invalid_argument("polynomial parse: negative exponent");
            }
            mono.exps[v] += e;
            any = true;
        }
        return any;
    }
};

}  // namespace

Polynomial Polynomial::parse(RingPtr ring, const std::string& text) {
    Parser p(text, *ring);
    std::vector<Term> terms;
    bool expect_term = true;
    while (!p.eof()) {
        int sign = 1;
        while (!p.eof() && (p.peek() == '+' || p.peek() == '-')) {
            if (p.peek() == '-') sign = -sign;
            ++p.pos;
            expect_term = true;
        }
        if (p.eof()) {
            if (expect_term && !terms.empty())
                throw std::invalid_argument("polynomial parse: dangling sign");
            break;
        }
        Monomial mono = Monomial::one(ring->nvars());
        mpz_class coeff = sign;
        if (!p.parse_term(mono, coeff)) {
            throw std::invalid_argument("polynomial parse: unexpected character '" +
                                        std::string(1, p.peek()) + "' at position " +
                                        std::to_string(p.pos));
        }
        terms.push_back({std::move(mono), std::move(coeff)});
        expect_term = false;
    }
    return Polynomial::from_terms(std::move(ring), std::move(terms));
}

}  // namespace persalg
