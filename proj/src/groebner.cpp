#include "persalg/groebner.hpp"

#include <algorithm>
#include <deque>

namespace persalg {

namespace {

mpz_class modinv_z(const mpz_class& a, long p) {
    mpz_class r, pz(p);
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), pz.get_mpz_t()) == 0)
        throw std::domain_error("groebner: zero divisor");
    return r;
}

// Monic over ZZ/p, primitive with positive lead over ZZ.
Polynomial canonical_scale(const Polynomial& f, MonomialOrder o) {
    if (f.is_zero()) return f;
    const RingPtr& R = f.ring();
    if (R->is_field()) {
        mpz_class inv = modinv_z(f.leading_term(o).coeff, R->prime());
        return f.scaled(inv);
    }
    Polynomial g = f.primitive_part();
    if (g.leading_term(o).coeff < 0) g = -g;
    return g;
}

// One reduction step at f's o-leading term, fraction-free over ZZ. The
// applied scale of f is reported so the caller can keep any carried parts
// (the partial remainder) consistent.
bool reduce_lead_once(Polynomial& f, const Polynomial& g, MonomialOrder o, mpz_class& scale) {
    const auto& fl = f.leading_term(o);
    const auto& gl = g.leading_term(o);
    if (!gl.mono.divides(fl.mono)) return false;
    Monomial q = fl.mono.quotient(gl.mono);
    const RingPtr& R = f.ring();
    if (R->is_field()) {
        scale = 1;
        mpz_class c = R->normalize_coeff(fl.coeff * modinv_z(gl.coeff, R->prime()));
        f = f - g.times_term(q, c);
    } else {
        mpz_class gcd;
        mpz_gcd(gcd.get_mpz_t(), fl.coeff.get_mpz_t(), gl.coeff.get_mpz_t());
        mpz_class mf = gl.coeff / gcd, mg = fl.coeff / gcd;
        scale = mf;
        f = f.scaled(mf) - g.times_term(q, mg);
    }
    return true;
}

Polynomial divide_coeffs(const Polynomial& f, const mpz_class& c) {
    std::vector<Polynomial::Term> ts;
    for (const auto& t : f.terms()) ts.push_back({t.mono, t.coeff / c});
    return Polynomial::from_terms(f.ring(), std::move(ts));
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis, MonomialOrder o) {
    const RingPtr& R = f.ring();
    for (const auto& g : basis) require_same_ring(R, g.ring(), "normal_form");
    Polynomial rem = Polynomial::zero(R);
    Polynomial work = f;
    while (!work.is_zero()) {
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            mpz_class scale = 1;
            if (reduce_lead_once(work, g, o, scale)) {
                if (scale != 1 && !rem.is_zero()) rem = rem.scaled(scale);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            // Move the leading term into the remainder.
            const auto& lt = work.leading_term(o);
            Polynomial head = Polynomial::term(R, lt.mono, lt.coeff);
            rem = rem + head;
            work = work - head;
        }
        if (!R->is_field() && !work.is_zero()) {
            // Shared content can be cancelled from the pair (rem, work).
            mpz_class c = work.content();
            if (c > 1 && !rem.is_zero()) {
                mpz_class cr = rem.content();
                mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), cr.get_mpz_t());
            }
            if (c > 1) {
                work = divide_coeffs(work, c);
                if (!rem.is_zero()) rem = divide_coeffs(rem, c);
            }
        }
    }
    return canonical_scale(rem, o);
}

std::vector<Polynomial> groebner_basis(std::vector<Polynomial> gens, MonomialOrder o) {
    RingPtr R;
    std::vector<Polynomial> basis;
    for (auto& g : gens) {
        if (!R) R = g.ring();
        require_same_ring(R, g.ring(), "groebner_basis");
        if (!g.is_zero()) basis.push_back(canonical_scale(g, o));
    }
    if (basis.empty()) return basis;

    auto spair = [&](const Polynomial& f, const Polynomial& g) {
        const auto& fl = f.leading_term(o);
        const auto& gl = g.leading_term(o);
        Monomial l = fl.mono.lcm(gl.mono);
        if (R->is_field()) {
            mpz_class cf = modinv_z(fl.coeff, R->prime());
            mpz_class cg = modinv_z(gl.coeff, R->prime());
            return f.times_term(l.quotient(fl.mono), cf) - g.times_term(l.quotient(gl.mono), cg);
        }
        mpz_class gcd;
        mpz_gcd(gcd.get_mpz_t(), fl.coeff.get_mpz_t(), gl.coeff.get_mpz_t());
        return f.times_term(l.quotient(fl.mono), gl.coeff / gcd) -
               g.times_term(l.quotient(gl.mono), fl.coeff / gcd);
    };

    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        const Monomial& mi = basis[i].leading_term(o).mono;
        const Monomial& mj = basis[j].leading_term(o).mono;
        // Buchberger's coprimality criterion.
        Monomial l = mi.lcm(mj);
        if (l.total_degree() == mi.total_degree() + mj.total_degree()) {
            bool coprime = true;
            for (int v = 0; v < l.nvars(); ++v)
                if (mi.exps[v] > 0 && mj.exps[v] > 0) coprime = false;
            if (coprime) continue;
        }
        // Chain criterion: some k with lt(k) | lcm and both (i,k), (j,k) done.
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == i || k == j) continue;
            if (!basis[k].leading_term(o).mono.divides(l)) continue;
            bool ik_pending = false, jk_pending = false;
            for (const auto& pr : pairs) {
                auto [a, b] = pr;
                if ((a == std::min(i, k) && b == std::max(i, k))) ik_pending = true;
                if ((a == std::min(j, k) && b == std::max(j, k))) jk_pending = true;
            }
            if (!ik_pending && !jk_pending) skip = true;
        }
        if (skip) continue;

        Polynomial s = normal_form(spair(basis[i], basis[j]), basis, o);
        if (!s.is_zero()) {
            basis.push_back(s);
            std::size_t n = basis.size() - 1;
            for (std::size_t k = 0; k < n; ++k) pairs.emplace_back(k, n);
        }
    }

    // Minimalize: drop elements whose lead is divisible by another lead.
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            const Monomial& mi = basis[i].leading_term(o).mono;
            const Monomial& mj = basis[j].leading_term(o).mono;
            if (mj.divides(mi) && (mi != mj || j < i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // Tail-reduce each element against the others.
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial nf = normal_form(minimal[i], others, o);
        if (!nf.is_zero()) reduced.push_back(canonical_scale(nf, o));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order_compare(o, a.leading_term(o).mono, b.leading_term(o).mono) > 0;
    });
    return reduced;
}

bool ideal_member(const Polynomial& f, const std::vector<Polynomial>& groebner, MonomialOrder o) {
    return normal_form(f, groebner, o).is_zero();
}

bool ideal_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b, MonomialOrder o) {
    RingPtr R;
    for (const auto& f : a) {
        if (!R) R = f.ring();
        require_same_ring(R, f.ring(), "ideal_equal");
    }
    for (const auto& f : b) {
        if (!R) R = f.ring();
        require_same_ring(R, f.ring(), "ideal_equal");
    }
    auto ga = groebner_basis(a, o);
    auto gb = groebner_basis(b, o);
    for (const auto& f : a)
        if (!ideal_member(f, gb, o)) return false;
    for (const auto& f : b)
        if (!ideal_member(f, ga, o)) return false;
    return true;
}

namespace {

void count_free(const std::vector<Monomial>& leads, std::vector<int>& exps, int var, int remaining,
                long& count) {
    if (var == static_cast<int>(exps.size()) - 1) {
        exps[var] = remaining;
        Monomial m{exps};
        for (const auto& l : leads)
            if (l.divides(m)) {
                exps[var] = 0;
                return;
            }
        ++count;
        exps[var] = 0;
        return;
    }
    for (int e = 0; e <= remaining; ++e) {
        exps[var] = e;
        count_free(leads, exps, var + 1, remaining - e, count);
    }
    exps[var] = 0;
}

}  // namespace

long staircase_dimension(const std::vector<Polynomial>& groebner, MonomialOrder o, int nvars,
                         int degree) {
    std::vector<Monomial> leads;
    for (const auto& g : groebner)
        if (!g.is_zero()) leads.push_back(g.leading_term(o).mono);
    std::vector<int> exps(nvars, 0);
    long count = 0;
    if (nvars == 0) return degree == 0 ? 1 : 0;
    count_free(leads, exps, 0, degree, count);
    return count;
}

}  // namespace persalg
