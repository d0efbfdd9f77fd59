#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "persalg/groebner.hpp"
#include "persalg/varieties.hpp"

using namespace persalg;

namespace {

const RankedFormat& fmt_253() {
    static RankedFormat f({2, 5, 3}, {2, 3});
    return f;
}

SymbolMonomial parse_m(const RankedFormat& f, const std::string& s) {
    return SymbolMonomial::parse(f, s);
}

}  // namespace

TEST_CASE("total order on the minors of a 2x3 matrix") {
    RankedFormat f({2, 3}, {2});
    std::vector<std::string> chain = {"<2|3>_1",   "<2|2>_1",   "<2|1>_1",
                                      "<1|3>_1",   "<1|2>_1",   "<1|1>_1",
                                      "<1,2|2,3>_1", "<1,2|1,3>_1", "<1,2|1,2>_1"};
    std::vector<MinorSymbol> syms;
    for (const auto& s : chain) {
        auto m = parse_m(f, s);
        syms.push_back(m.per_level[0][0]);
    }
    for (std::size_t i = 0; i + 1 < syms.size(); ++i)
        CHECK(symbol_total_order(syms[i], syms[i + 1]) < 0);
    CHECK(symbol_total_order(syms[0], syms[0]) == 0);
    // A-comparison decides first: <2|1> < <1|2>.
    CHECK(symbol_total_order(syms[2], syms[4]) < 0);
    CHECK_THROWS_AS(symbol_total_order(MinorSymbol(1, {1}, {1}), MinorSymbol(2, {1}, {1})),
                    std::invalid_argument);
}

TEST_CASE("partial order reproduces the displayed Hasse relations") {
    auto S = [](const std::string& a, const std::string& b) {
        RankedFormat f({2, 3}, {2});
        return symbol_partial_order(parse_m(f, a).per_level[0][0], parse_m(f, b).per_level[0][0]);
    };
    CHECK(S("<1,2|1,3>_1", "<1,2|1,2>_1") == PartialCmp::Less);
    CHECK(S("<1|1>_1", "<1,2|1,3>_1") == PartialCmp::Less);
    CHECK(S("<1,2|2,3>_1", "<1,2|1,3>_1") == PartialCmp::Less);
    CHECK(S("<1|1>_1", "<1,2|2,3>_1") == PartialCmp::Incomparable);
    CHECK(S("<2|1>_1", "<1|1>_1") == PartialCmp::Less);
    CHECK(S("<1|2>_1", "<1|1>_1") == PartialCmp::Less);
    CHECK(S("<2|2>_1", "<2|1>_1") == PartialCmp::Less);
    CHECK(S("<2|2>_1", "<1|2>_1") == PartialCmp::Less);
    CHECK(S("<2|3>_1", "<2|2>_1") == PartialCmp::Less);
    CHECK(S("<2|3>_1", "<1|3>_1") == PartialCmp::Less);
    CHECK(S("<1|3>_1", "<1|2>_1") == PartialCmp::Less);
    CHECK(S("<1|1>_1", "<1|1>_1") == PartialCmp::Equal);
    CHECK(S("<2|2>_1", "<1|1>_1") == PartialCmp::Less);
    // Covering: nothing sits strictly between <1|1> and <1,2|1,3>.
    RankedFormat f({2, 3}, {2});
    auto top = parse_m(f, "<1,2|1,3>_1").per_level[0][0];
    auto bot = parse_m(f, "<1|1>_1").per_level[0][0];
    for (const auto& v : symbol_pool(f)) {
        if (symbol_partial_order(bot, v) == PartialCmp::Less &&
            symbol_partial_order(v, top) == PartialCmp::Less) {
            CHECK(false);  // would contradict the covering relation
        }
    }
}

TEST_CASE("tableau_of the worked monomials") {
    const auto& f = fmt_253();
    auto m1 = parse_m(f, "<1,2|1,4>_1*<2|3>_1*<1,3|2,3>_2");
    auto t1 = tableau_of(m1, f);
    REQUIRE(t1.size() == 3);
    CHECK(t1[0] == Tableau::parse("12/2"));
    CHECK(t1[1] == Tableau::parse("1245/235/13"));
    CHECK(t1[2] == Tableau::parse("1"));

    auto m2 = parse_m(f, "<1,2|1,4>_1*<2|3>_1*<2,3|2,3>_2");
    auto t2 = tableau_of(m2, f);
    CHECK(t2[0] == Tableau::parse("12/2"));
    CHECK(t2[1] == Tableau::parse("1245/235/23"));
    CHECK(t2[2] == Tableau::parse("1"));

    CHECK(tableau_of(SymbolMonomial(2), f).size() == 3);
    for (const auto& fac : tableau_of(SymbolMonomial(2), f)) CHECK(fac.rows.empty());
}

TEST_CASE("classification of the worked monomials") {
    const auto& f = fmt_253();
    auto m1 = parse_m(f, "<1,2|1,4>_1*<2|3>_1*<1,3|2,3>_2");
    CHECK(classify_monomial(m1, f) == MonomialClass::NonstandardTableau);
    auto m2 = parse_m(f, "<1,2|1,4>_1*<2|3>_1*<2,3|2,3>_2");
    CHECK(classify_monomial(m2, f) == MonomialClass::NonstandardVmax);
    auto m3 = parse_m(f, "<2|3>_1*<2,3|2,3>_2");
    CHECK(classify_monomial(m3, f) == MonomialClass::Standard);
    CHECK(is_standard_monomial(m3, f));
    CHECK_FALSE(initial_ideal_member(m3, f));
    CHECK(initial_ideal_member(m1, f));
    CHECK_FALSE(initial_ideal_member(SymbolMonomial(2), f));
}

TEST_CASE("multi-component classification") {
    // Three parallel copies on dims (2,4,5,3); the second and third factors
    // fail standardness, so the product is nonstandard.
    RankedFormat c1({2, 4, 5, 3}, {2, 2, 3});
    RankedFormat c2({2, 4, 5, 3}, {2, 2, 3});
    RankedFormat c3({2, 4, 5, 3}, {1, 3, 2});
    auto m1 = parse_m(c1, "<2|3>_1*<2|2>_1*<4|3>_2*<2,4|2,3>_3");
    auto m2 = parse_m(c2, "<2|2>_2*<1,2|1,2>_3");
    auto m3 = parse_m(c3, "<2,3|2,3>_2*<2,3|1,2>_3");
    CHECK(classify_monomial(m1, c1) == MonomialClass::Standard);
    CHECK(classify_monomial(m2, c2) == MonomialClass::NonstandardTableau);
    CHECK_FALSE(is_standard_monomial(m3, c3));
    CHECK_FALSE(is_standard_multi({m1, m2, m3}, {c1, c2, c3}));
    CHECK(is_standard_multi({m1}, {c1}));
    CHECK(is_standard_multi({SymbolMonomial(3), SymbolMonomial(3)}, {c1, c2}));
    CHECK_THROWS_AS(is_standard_multi({m1}, {c1, c2}), std::invalid_argument);

    // The comparison monomial differing in one symbol of the middle factor is
    // strictly smaller in the product order.
    auto m2_smaller = parse_m(c2, "<3|2>_2*<1,2|1,2>_3");
    CHECK(symbol_monomial_order(m2, m2_smaller) > 0);
}

TEST_CASE("enumerate_standard") {
    // Rank-1 format on a single entry: the sole symbol is excluded.
    RankedFormat f11({1, 1}, {1});
    CHECK(enumerate_standard(f11, 1).empty());
    auto d0 = enumerate_standard(f11, 0);
    REQUIRE(d0.size() == 1);
    CHECK(d0[0].empty());

    // Full-rank 2x2 format: counts match the determinantal ring K[X]/(det).
    RankedFormat f22({2, 2}, {2});
    auto o = MonomialOrder::GradedRevLex;
    auto ideal = coordinate_ring_ideal(f22);
    auto gb = groebner_basis(ideal.gens, o);
    for (int d = 0; d <= 3; ++d) {
        long count = static_cast<long>(enumerate_standard(f22, d).size());
        CHECK(count == staircase_dimension(gb, o, ideal.ring->nvars(), d));
    }
    CHECK(enumerate_standard(f22, 2).size() == 9);
}

TEST_CASE("standard monomial counts match the coordinate ring dimensions") {
    auto o = MonomialOrder::GradedRevLex;
    std::vector<RankedFormat> formats = {
        RankedFormat({1, 1}, {1}),       RankedFormat({1, 2}, {1}),
        RankedFormat({2, 2}, {1}),       RankedFormat({2, 2}, {2}),
        RankedFormat({1, 1, 1}, {1, 1}), RankedFormat({2, 1, 2}, {1, 1}),
        RankedFormat({2, 2, 2}, {2, 2}), RankedFormat({2, 2, 2}, {2, 1}),
        RankedFormat({1, 2, 1}, {1, 1}),
    };
    for (const auto& f : formats) {
        auto ideal = coordinate_ring_ideal(f);
        auto gb = groebner_basis(ideal.gens, o);
        for (int d = 0; d <= 3; ++d) {
            long count = static_cast<long>(enumerate_standard(f, d).size());
            long dim = staircase_dimension(gb, o, ideal.ring->nvars(), d);
            INFO("dims ", f.dims.size(), " degree ", d);
            CHECK(count == dim);
        }
    }
}

TEST_CASE("initial ideal is closed under multiplication") {
    const auto& f = fmt_253();
    std::mt19937_64 rng(808);
    auto pool = symbol_pool(f);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    int checked = 0;
    while (checked < 60) {
        std::vector<MinorSymbol> syms;
        int len = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < len; ++i) syms.push_back(pool[pick(rng)]);
        auto m = SymbolMonomial::from_symbols(f, syms);
        if (!initial_ideal_member(m, f)) continue;
        // Any multiple stays in the ideal.
        syms.push_back(pool[pick(rng)]);
        auto mm = SymbolMonomial::from_symbols(f, syms);
        CHECK(initial_ideal_member(mm, f));
        ++checked;
    }
}

TEST_CASE("delta complex faces") {
    RankedFormat f11({1, 1}, {1});
    auto faces = delta_complex_faces(f11, 2);
    REQUIRE(faces.size() == 1);
    CHECK(faces[0].empty());

    RankedFormat f({2, 2}, {2});
    auto fs = delta_complex_faces(f, 3);
    CHECK(fs.size() > 1);
    // Downward closure: dropping any vertex of a face leaves a face.
    auto face_key = [](const std::vector<MinorSymbol>& face) {
        std::string s;
        for (const auto& v : face) s += v.to_string() + ";";
        return s;
    };
    std::set<std::string> all;
    for (const auto& face : fs) all.insert(face_key(face));
    for (const auto& face : fs) {
        for (std::size_t drop = 0; drop < face.size(); ++drop) {
            std::vector<MinorSymbol> sub;
            for (std::size_t i = 0; i < face.size(); ++i)
                if (i != drop) sub.push_back(face[i]);
            CHECK(all.count(face_key(sub)) == 1);
        }
    }
}

TEST_CASE("degeneration order") {
    RankedFormat a({2, 4, 2}, {2, 2});
    RankedFormat b({2, 4, 2}, {1, 2});
    auto cmp = degeneration_order(b, a);
    CHECK(cmp.cmp == PartialCmp::Less);

    RankedFormat c({2, 4, 2}, {2, 1});
    RankedFormat d({2, 4, 2}, {1, 2});
    auto cmp2 = degeneration_order(c, d);
    CHECK(cmp2.cmp == PartialCmp::Incomparable);
    CHECK(cmp2.meet == std::vector<int>{1, 1});
    CHECK(degeneration_order(a, a).cmp == PartialCmp::Equal);
    CHECK_THROWS_AS(degeneration_order(a, RankedFormat({2, 4, 3}, {2, 2})),
                    std::invalid_argument);
}

TEST_CASE("maximal rank sequences") {
    auto maxi = maximal_rank_sequences({1, 3, 2});
    REQUIRE(maxi.size() == 1);
    CHECK(maxi[0] == std::vector<int>{1, 2});
    // For (2,2,2) the maximal sequences are exactly the ones filling b_1.
    auto m2 = maximal_rank_sequences({2, 2, 2});
    for (const auto& r : m2) CHECK(r[0] + r[1] == 2);
    CHECK(m2.size() == 3);  // (0,2), (1,1), (2,0)
}

TEST_CASE("symbol monomial text round trip") {
    const auto& f = fmt_253();
    auto m = parse_m(f, "<2|3>_1*<2,3|2,3>_2");
    CHECK(SymbolMonomial::parse(f, m.to_string()) == m);
    CHECK(SymbolMonomial(2).to_string() == "1");
    CHECK_THROWS_AS(parse_m(f, "<1,2,3|1,2,3>_1"), std::invalid_argument);  // size > rank
}
