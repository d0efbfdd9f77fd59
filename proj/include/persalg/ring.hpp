#pragma once

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace persalg {

enum class CoeffDomain { Integers, PrimeField };

enum class MonomialOrder { GradedRevLex, Lex };

// Exponent vector a = (a_1, ..., a_n) standing for x_1^{a_1} ... x_n^{a_n}.
struct Monomial {
    std::vector<int> exps;

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}
    static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }
    static Monomial var(int nvars, int i) {  // i is 0-based
        Monomial m = one(nvars);
        m.exps.at(i) = 1;
        return m;
    }

    int nvars() const { return static_cast<int>(exps.size()); }
    int total_degree() const {
        int d = 0;
        for (int e : exps) d += e;
        return d;
    }
    bool is_one() const {
        for (int e : exps)
            if (e != 0) return false;
        return true;
    }
    // The multidegree in N^n; identifies x^u with u.
    const std::vector<int>& multidegree() const { return exps; }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] += o.exps[i];
        return r;
    }
    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > o.exps[i]) return false;
        return true;
    }
    Monomial quotient(const Monomial& o) const {  // *this / o, caller checks divisibility
        Monomial r(*this);
        for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] -= o.exps[i];
        return r;
    }
    Monomial lcm(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] = std::max(r.exps[i], o.exps[i]);
        return r;
    }
    bool operator==(const Monomial& o) const { return exps == o.exps; }
    bool operator!=(const Monomial& o) const { return exps != o.exps; }
};

// Comparison under a monomial order: +1 if a > b, 0 if equal, -1 if a < b.
// GradedRevLex: total degree first; on ties the last differing exponent,
// smaller entry meaning the larger monomial.
inline int order_compare(MonomialOrder o, const Monomial& a, const Monomial& b) {
    if (a.exps.size() != b.exps.size())
        throw std::invalid_argument("order_compare: monomials from different rings");
    switch (o) {
        case MonomialOrder::GradedRevLex: {
            int da = a.total_degree(), db = b.total_degree();
            if (da != db) return da > db ? 1 : -1;
            for (int i = static_cast<int>(a.exps.size()) - 1; i >= 0; --i) {
                if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? 1 : -1;
            }
            return 0;
        }
        case MonomialOrder::Lex: {
            for (std::size_t i = 0; i < a.exps.size(); ++i) {
                if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i] ? 1 : -1;
            }
            return 0;
        }
    }
    return 0;
}

// Ring context: K[x_1, ..., x_n] with K = ZZ or ZZ/p, a fixed variable list
// and the active monomial order used for canonical term storage.
class RingCtx {
public:
    RingCtx(int nvars, CoeffDomain domain = CoeffDomain::Integers, long prime = 0,
            std::vector<std::string> names = {}, MonomialOrder order = MonomialOrder::GradedRevLex,
            std::string default_stem = "x")
        : nvars_(nvars), domain_(domain), prime_(prime), order_(order), names_(std::move(names)) {
        if (nvars_ < 1) throw std::invalid_argument("RingCtx: need at least one variable");
        if (domain_ == CoeffDomain::PrimeField) {
            if (prime_ < 2 || !is_prime(prime_))
                throw std::invalid_argument("RingCtx: modulus must be prime");
        } else {
            prime_ = 0;
        }
        if (names_.empty()) {
            names_.reserve(nvars_);
            for (int i = 1; i <= nvars_; ++i) names_.push_back(default_stem + "_" + std::to_string(i));
        }
        if (static_cast<int>(names_.size()) != nvars_)
            throw std::invalid_argument("RingCtx: variable name count mismatch");
    }

    int nvars() const { return nvars_; }
    CoeffDomain domain() const { return domain_; }
    long prime() const { return prime_; }
    MonomialOrder order() const { return order_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int i) const { return names_.at(i); }
    bool is_field() const { return domain_ == CoeffDomain::PrimeField; }

    bool same_as(const RingCtx& o) const {
        return nvars_ == o.nvars_ && domain_ == o.domain_ && prime_ == o.prime_ &&
               order_ == o.order_ && names_ == o.names_;
    }

    // Coefficient normalization for the ring's domain.
    mpz_class normalize_coeff(mpz_class c) const {
        if (domain_ == CoeffDomain::PrimeField) {
            c %= prime_;
            if (c < 0) c += prime_;
        }
        return c;
    }

    static bool is_prime(long p) {
        if (p < 2) return false;
        for (long d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }

private:
    int nvars_;
    CoeffDomain domain_;
    long prime_;
    MonomialOrder order_;
    std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const RingCtx>;

inline RingPtr make_ring(int nvars, CoeffDomain domain = CoeffDomain::Integers, long prime = 0,
                         std::vector<std::string> names = {},
                         MonomialOrder order = MonomialOrder::GradedRevLex,
                         std::string default_stem = "x") {
    return std::make_shared<RingCtx>(nvars, domain, prime, std::move(names), order,
                                     std::move(default_stem));
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where) {
    if (a.get() == b.get()) return;
    if (!a || !b || !a->same_as(*b))
        throw std::invalid_argument(std::string(where) + ": ring mismatch");
}

}  // namespace persalg
