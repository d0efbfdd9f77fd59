#pragma once

#include <optional>

#include "persalg/ring.hpp"

namespace persalg {

// Sparse multivariate polynomial with exact coefficients. Terms are kept
// sorted descending in the ring's monomial order, with no zero coefficients;
// this makes printing deterministic and equality a term-by-term comparison.
class Polynomial {
public:
    struct Term {
        Monomial mono;
        mpz_class coeff;
    };

    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, const mpz_class& c);
    static Polynomial variable(RingPtr ring, int i);  // 0-based variable index
    static Polynomial term(RingPtr ring, Monomial m, const mpz_class& c);
    // Builds from arbitrary (monomial, coeff) pairs; merges and normalizes.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    std::size_t num_terms() const { return terms_.size(); }

    // Leading data under the ring's active order.
    const Term& leading_term() const;
    // Leading term under an arbitrary order (linear scan).
    const Term& leading_term(MonomialOrder o) const;

    int total_degree() const;  // max over terms; -1 for the zero polynomial

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial scaled(const mpz_class& c) const;
    Polynomial times_term(const Monomial& m, const mpz_class& c) const;

    // Exact division: returns quotient iff divisor*quotient == *this.
    std::optional<Polynomial> exact_divide(const Polynomial& divisor) const;

    // gcd of all coefficients (positive), 0 for the zero polynomial.
    mpz_class content() const;
    // Divides by content and fixes the leading coefficient positive.
    Polynomial primitive_part() const;

    // Evaluation at an integer point (length nvars).
    mpz_class evaluate(const std::vector<mpz_class>& point) const;

    // Substitution homomorphism: images[i] is the image of variable i in the
    // target ring. Coefficients are reinterpreted in the target domain.
    Polynomial substitute(const RingPtr& target, const std::vector<Polynomial>& images) const;

    std::string to_string() const;
    static Polynomial parse(RingPtr ring, const std::string& text);

private:
    RingPtr ring_;
    std::vector<Term> terms_;

    void normalize();  // sort descending, merge, drop zeros, reduce mod p
    friend class PolyBuilder;
};

inline Polynomial operator*(const mpz_class& c, const Polynomial& p) { return p.scaled(c); }

}  // namespace persalg
