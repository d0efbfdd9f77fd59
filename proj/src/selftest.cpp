#include "persalg/selftest.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "persalg/complexes.hpp"
#include "persalg/determinantal.hpp"
#include "persalg/golden.hpp"
#include "persalg/groebner.hpp"
#include "persalg/persistence.hpp"
#include "persalg/varieties.hpp"

namespace persalg {

namespace {

using Runner = std::vector<SelftestCase>;

void record(Runner& out, const std::string& name, bool pass, const std::string& detail = "") {
    out.push_back({name, pass, detail});
}

void run_guarded(Runner& out, const std::string& name, const std::function<bool()>& fn) {
    try {
        record(out, name, fn());
    } catch (const std::exception& e) {
        record(out, name, false, e.what());
    }
}

RingPtr fixture_ring_xy() {
    std::vector<std::string> names;
    for (int i = 1; i <= 15; ++i) names.push_back("x_" + std::to_string(i));
    for (int i = 1; i <= 10; ++i) names.push_back("y_" + std::to_string(i));
    return make_ring(25, CoeffDomain::Integers, 0, names);
}

std::string join_polys(const std::vector<Polynomial>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].to_string();
    }
    return s;
}

}  // namespace

std::vector<SelftestCase> run_selftest(const std::string& filter) {
    Runner all;
    using golden::normalize;

    run_guarded(all, "golden/generic-2x4", [] {
        auto R8 = make_ring(8);
        return normalize(generic_matrix(R8, 0, 2, 4).to_string()) ==
               normalize(golden::GENERIC_2X4);
    });
    run_guarded(all, "golden/matmul-3x5-5x2", [] {
        auto R = fixture_ring_xy();
        auto A = generic_matrix(R, 0, 3, 5);
        auto B = generic_matrix(R, 15, 5, 2);
        return normalize((A * B).to_string()) == normalize(golden::MATMUL_AB);
    });
    run_guarded(all, "golden/wedge2-A-transpose", [] {
        auto R = fixture_ring_xy();
        auto A = generic_matrix(R, 0, 3, 5);
        return normalize(exterior_power(2, A).transpose().to_string()) ==
               normalize(golden::WEDGE2_A_T);
    });
    run_guarded(all, "golden/wedge3-A", [] {
        auto R = fixture_ring_xy();
        return normalize(exterior_power(3, generic_matrix(R, 0, 3, 5)).to_string()) ==
               normalize(golden::WEDGE3_A);
    });
    run_guarded(all, "golden/wedge2-B", [] {
        auto R = fixture_ring_xy();
        return normalize(exterior_power(2, generic_matrix(R, 15, 5, 2)).to_string()) ==
               normalize(golden::WEDGE2_B);
    });
    run_guarded(all, "golden/minors2-2x4", [] {
        auto R8 = make_ring(8);
        return normalize(join_polys(minors_ideal(2, generic_matrix(R8, 0, 2, 4)))) ==
               normalize(golden::MINORS2_2X4);
    });
    run_guarded(all, "golden/generic-complex-blocks", [] {
        auto G = generic_complex_ring({1, 6, 8, 4, 1});
        return normalize(join_polys(G.product_blocks[0])) == normalize(golden::Y1Y2_BLOCK) &&
               normalize(join_polys(G.product_blocks[2])) == normalize(golden::Y3Y4_BLOCK);
    });

    run_guarded(all, "complexes/two-variable-multiplier", [] {
        auto R = make_ring(2, CoeffDomain::Integers, 0, {"x", "y"});
        PolyMatrix d1(R, 2, 3), d2(R, 3, 1);
        d1.set(0, 0, Polynomial::parse(R, "x^2"));
        d1.set(1, 1, Polynomial::parse(R, "x"));
        d1.set(1, 2, Polynomial::parse(R, "y"));
        d2.set(1, 0, Polynomial::parse(R, "-y"));
        d2.set(2, 0, Polynomial::parse(R, "x"));
        FreeComplex C(R, {2, 3, 1}, {d1, d2});
        auto T = be_multipliers(C, {2, 1});
        if (!(T.at(1, {1, 2}) == Polynomial::parse(R, "x^2"))) return false;
        if (!be_diagram_check(C, {2, 1}, T)) return false;
        return tchernev_spot_check(C, {2, 1}, T, 300) > 0;
    });

    run_guarded(all, "tableaux/worked-classifications", [] {
        RankedFormat f({2, 5, 3}, {2, 3});
        auto m1 = SymbolMonomial::parse(f, "<1,2|1,4>_1*<2|3>_1*<1,3|2,3>_2");
        auto m2 = SymbolMonomial::parse(f, "<1,2|1,4>_1*<2|3>_1*<2,3|2,3>_2");
        auto m3 = SymbolMonomial::parse(f, "<2|3>_1*<2,3|2,3>_2");
        return classify_monomial(m1, f) == MonomialClass::NonstandardTableau &&
               classify_monomial(m2, f) == MonomialClass::NonstandardVmax &&
               classify_monomial(m3, f) == MonomialClass::Standard;
    });

    run_guarded(all, "tableaux/straighten-worked", [] {
        Bitableau bad = Bitableau::parse("(123/123/13/12/1/2 | 123/125/12/23/5/5)");
        auto out = straighten(bad, 3, 5);
        std::mt19937_64 rng(11);
        std::uniform_int_distribution<long> dist(-5, 5);
        for (const auto& [t, c] : out)
            if (!is_standard(t)) return false;
        for (int trial = 0; trial < 5; ++trial) {
            Mat<mpz_class> M(3, std::vector<mpz_class>(5));
            for (auto& row : M)
                for (auto& v : row) v = dist(rng);
            if (eval_bitableau_sum(out, M) != eval_bitableau(bad, M)) return false;
        }
        return true;
    });

    run_guarded(all, "tableaux/cauchy-weight-2", [] {
        long total = 0;
        for (const auto& lam : partitions_of(2)) {
            long d = schur_dimension(lam, 2);
            total += d * d;
        }
        return total == 10;
    });

    run_guarded(all, "rank-conditions/small-scan", [] {
        for (int b0 = 0; b0 <= 3; ++b0)
            for (int b1 = 0; b1 <= 3; ++b1)
                for (int b2 = 0; b2 <= 3; ++b2) {
                    auto r = rank_conditions({b0, b1, b2});
                    bool ok = b2 >= 0 && b1 - b2 >= 0 && b0 - b1 + b2 >= 0;
                    if (r.has_value() != ok) return false;
                }
        return true;
    });

    run_guarded(all, "persistence/triangle-ranks", [] {
        Bifiltration b;
        b.grid = {1, 1};
        auto add = [&](std::vector<int> v, int t, int s) {
            Simplex sx;
            sx.verts = std::move(v);
            sx.grade = {t, s};
            b.simplices.push_back(sx);
        };
        add({0}, 0, 0);
        add({1}, 0, 0);
        add({2}, 0, 0);
        add({0, 1}, 0, 0);
        add({0, 2}, 0, 0);
        add({1, 2}, 0, 0);
        add({0, 1, 2}, 1, 1);
        b.validate();
        return rank_invariant(b, 1, {0, 0}, {0, 0}) == 1 &&
               rank_invariant(b, 1, {0, 0}, {1, 1}) == 0;
    });

    run_guarded(all, "fitting/two-block", [] {
        auto R = make_ring(2, CoeffDomain::Integers, 0, {"x", "y"});
        PolyMatrix m(R, 2, 3);
        m.set(0, 0, Polynomial::parse(R, "x^2"));
        m.set(1, 1, Polynomial::parse(R, "x"));
        m.set(1, 2, Polynomial::parse(R, "y"));
        Presentation P{m};
        auto o = MonomialOrder::GradedRevLex;
        return ideal_equal(fitting_ideal(P, 0),
                           {Polynomial::parse(R, "x^3"), Polynomial::parse(R, "x^2*y")}, o) &&
               ideal_equal(fitting_ideal(P, 1),
                           {Polynomial::parse(R, "x"), Polynomial::parse(R, "y")}, o) &&
               fitting_ideal(P, 2) == std::vector<Polynomial>{Polynomial::constant(R, 1)};
    });

    if (filter.empty()) return all;
    Runner kept;
    for (auto& c : all)
        if (c.name.find(filter) != std::string::npos) kept.push_back(std::move(c));
    return kept;
}

}  // namespace persalg
