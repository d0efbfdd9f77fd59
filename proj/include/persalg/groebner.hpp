#pragma once

#include "persalg/polynomial.hpp"

namespace persalg {

// Buchberger engine used as an ideal-membership and ideal-equality oracle.
//
// Coefficient handling: over ZZ/p the arithmetic is the field's. Over the
// Integers domain the computation is the rational one, carried fraction-free:
// every intermediate polynomial is kept primitive (integer coefficients,
// positive leading coefficient), which represents the monic rational
// polynomial up to a unit. The returned basis is the reduced Groebner basis
// of the ideal over QQ in that primitive-integer form.

// Remainder of f on division by basis (multivariate division algorithm).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis, MonomialOrder o);

// Reduced Groebner basis. Requires a field (ZZ/p) or the Integers domain
// (treated as QQ); basis elements are monic (field) or primitive (QQ).
std::vector<Polynomial> groebner_basis(std::vector<Polynomial> gens, MonomialOrder o);

bool ideal_member(const Polynomial& f, const std::vector<Polynomial>& groebner, MonomialOrder o);

// Equality of ideals via mutual membership against the two reduced bases.
bool ideal_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b, MonomialOrder o);

// Number of degree-d monomials in n variables outside the initial ideal of
// the given reduced basis (a vector-space dimension of R/I in degree d when
// I is homogeneous).
long staircase_dimension(const std::vector<Polynomial>& groebner, MonomialOrder o, int nvars, int degree);

}  // namespace persalg
