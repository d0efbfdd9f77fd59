#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "persalg/tableaux.hpp"

using namespace persalg;

namespace {

Mat<mpz_class> random_int_matrix(std::mt19937_64& rng, int rows, int cols, int bound = 9) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    Mat<mpz_class> m(rows, std::vector<mpz_class>(cols));
    for (auto& row : m)
        for (auto& v : row) v = dist(rng);
    return m;
}

// Independent brute-force count of standard fillings, box by box.
long schur_dimension_bruteforce(const Partition& shape, int n) {
    std::vector<std::vector<int>> rows;
    for (int p : shape.parts) rows.emplace_back(p, 0);
    long count = 0;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t r, std::size_t c) {
        if (r == rows.size()) {
            Tableau t(rows);
            if (is_standard(t)) ++count;
            return;
        }
        std::size_t nr = r, nc = c + 1;
        if (nc == rows[r].size()) {
            nr = r + 1;
            nc = 0;
        }
        for (int v = 1; v <= n; ++v) {
            rows[r][c] = v;
            rec(nr, nc);
        }
    };
    if (rows.empty()) return 1;
    rec(0, 0);
    return count;
}

mpz_class binomial(long n, long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Bitableau random_bitableau(std::mt19937_64& rng, int d1, int d2, int max_rows) {
    std::uniform_int_distribution<int> nrows(1, max_rows);
    int s = nrows(rng);
    std::vector<int> widths;
    std::uniform_int_distribution<int> w(1, std::min(d1, d2));
    for (int i = 0; i < s; ++i) widths.push_back(w(rng));
    std::sort(widths.rbegin(), widths.rend());
    auto pick = [&](int bound, int width) {
        std::vector<int> pool;
        for (int v = 1; v <= bound; ++v) pool.push_back(v);
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<int> row(pool.begin(), pool.begin() + width);
        std::sort(row.begin(), row.end());
        return row;
    };
    std::vector<std::vector<int>> l, r;
    for (int width : widths) {
        l.push_back(pick(d1, width));
        r.push_back(pick(d2, width));
    }
    return Bitableau(Tableau(std::move(l)), Tableau(std::move(r)));
}

}  // namespace

TEST_CASE("standardness of tableaux") {
    // The six-row Plucker tableau from the 3x8 bordered matrix is nonstandard.
    CHECK_FALSE(is_standard(Tableau::parse("123/125/127/238/567/568")));
    CHECK(is_standard(Tableau::parse("123")));
    CHECK(is_standard(Tableau::parse("12/2")));
    CHECK_FALSE(is_standard(Tableau::parse("12/21")));  // row not strict
    CHECK_THROWS_AS(is_standard(Tableau(std::vector<std::vector<int>>{{1}, {1, 2}})),
                    std::invalid_argument);
}

TEST_CASE("tableau text round trip") {
    CHECK(Tableau::parse("123/125").to_string() == "123/125");
    Tableau wide(std::vector<std::vector<int>>{{1, 12}, {3}});
    CHECK(Tableau::parse(wide.to_string()) == wide);
    Bitableau bt = Bitableau::parse("(12/2 | 13/4)");
    CHECK(bt.left == Tableau::parse("12/2"));
    CHECK(bt.right == Tableau::parse("13/4"));
}

TEST_CASE("shuffle relation: two-term exchange on a column pair") {
    ShuffleInput in;
    in.shape = Partition({1, 1});
    in.row_a = 1;
    in.middle = {4, 7};
    auto sum = shuffle_relation(in);
    REQUIRE(sum.size() == 2);
    CHECK(sum.at(Tableau(std::vector<std::vector<int>>{{4}, {7}})) == 1);
    CHECK(sum.at(Tableau(std::vector<std::vector<int>>{{7}, {4}})) == -1);
}

TEST_CASE("single-row shapes admit no shuffle relations") {
    ShuffleInput in;
    in.shape = Partition({3});
    in.middle = {1, 2, 3};
    CHECK(shuffle_relation(in).empty());
}

TEST_CASE("shuffle relations evaluate to zero as sums of minor products") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> val(1, 6);
    std::vector<Partition> shapes = {Partition({2, 2}), Partition({3, 2}), Partition({3, 3, 1}),
                                     Partition({2, 1})};
    for (const auto& shape : shapes) {
        for (int trial = 0; trial < 10; ++trial) {
            int s = static_cast<int>(shape.parts.size());
            std::uniform_int_distribution<int> arow(1, s - 1);
            ShuffleInput in;
            in.shape = shape;
            in.row_a = arow(rng);
            int la = shape.parts[in.row_a - 1], lb = shape.parts[in.row_a];
            std::uniform_int_distribution<int> ud(0, std::min(la, lb - 1));
            int u = ud(rng);
            std::uniform_int_distribution<int> vd(0, lb - u - 1);
            int v = vd(rng);
            for (int i = 0; i < u; ++i) in.prefix.push_back(val(rng));
            for (int i = 0; i < la - u + lb - v; ++i) in.middle.push_back(val(rng));
            for (int i = 0; i < v; ++i) in.suffix.push_back(val(rng));
            for (int i = 0; i < s; ++i) {
                if (i == in.row_a - 1 || i == in.row_a) continue;
                std::vector<int> row;
                for (int j = 0; j < shape.parts[i]; ++j) row.push_back(val(rng));
                in.other_rows.push_back(row);
            }
            auto sum = shuffle_relation(in);
            for (int m = 0; m < 5; ++m) {
                auto M = random_int_matrix(rng, shape.parts[0], 6);
                CHECK(eval_tableau_sum(sum, M) == 0);
            }
        }
    }
}

TEST_CASE("schur dimensions") {
    CHECK(schur_dimension(Partition({1}), 2) == 2);
    CHECK(schur_dimension(Partition({1, 1}), 2) == 3);
    CHECK(schur_dimension(Partition({2}), 2) == 1);
    CHECK(schur_dimension(Partition({4}), 3) == 0);  // more columns than the rank
    // Cauchy check in weight 2 and rank 2: 3^2 + 1^2 = dim Sym^2(K^2 (x) K^2).
    long total = 0;
    for (const auto& lam : partitions_of(2)) {
        long d = schur_dimension(lam, 2);
        total += d * d;
    }
    CHECK(total == 10);
}

TEST_CASE("schur dimension agrees with the box-by-box enumerator") {
    for (int m = 0; m <= 5; ++m) {
        for (const auto& lam : partitions_of(m)) {
            for (int n = 1; n <= 3; ++n)
                CHECK(schur_dimension(lam, n) == schur_dimension_bruteforce(lam, n));
        }
    }
}

TEST_CASE("standard bitableau counts match polynomial ring dimensions") {
    // Sum over shapes of weight d of s_lambda(m) * s_lambda(n) counts the
    // standard bitableaux, which form a basis of K[X_{m x n}] in degree d.
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n)
            for (int d = 0; d <= 3; ++d) {
                long total = 0;
                for (const auto& lam : partitions_of(d))
                    total += schur_dimension(lam, m) * schur_dimension(lam, n);
                CHECK(mpz_class(total) == binomial(m * n + d - 1, d));
            }
}

TEST_CASE("plucker relations for the Grassmannian of planes in 4-space") {
    auto rels = plucker_relations(2, 4);
    REQUIRE(rels.size() == 1);
    auto pr = plucker_ring(2, 4);
    // Variables in colex order: x_12 x_13 x_23 x_14 x_24 x_34.
    auto expected = Polynomial::parse(pr.ring, "x_12*x_34-x_13*x_24+x_14*x_23");
    CHECK((rels[0] == expected || rels[0] == -expected));
    CHECK(plucker_relations(1, 5).empty());
}

TEST_CASE("plucker relations vanish on minors of random matrices") {
    std::mt19937_64 rng(4096);
    for (auto [r, k] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 5}}) {
        auto pr = plucker_ring(r, k);
        auto rels = plucker_relations(r, k);
        CHECK(!rels.empty());
        for (int trial = 0; trial < 20; ++trial) {
            auto M = random_int_matrix(rng, r, k, 7);
            std::vector<mpz_class> point;
            for (const auto& s : pr.subsets) {
                Mat<mpz_class> sub(r, std::vector<mpz_class>(r));
                for (int i = 0; i < r; ++i)
                    for (int j = 0; j < r; ++j) sub[i][j] = M[i][s.elems[j] - 1];
                point.push_back(det_bareiss(sub));
            }
            for (const auto& rel : rels) CHECK(rel.evaluate(point) == 0);
        }
    }
}

TEST_CASE("straighten: standard input is a fixed point") {
    auto bt = Bitableau::parse("(12/2 | 23/4)");
    REQUIRE(is_standard(bt));
    auto out = straighten(bt, 3, 5);
    REQUIRE(out.size() == 1);
    CHECK(out.begin()->first == bt);
    CHECK(out.begin()->second == 1);
}

TEST_CASE("straighten: one-column violation gives the two-term exchange") {
    // x_{21} x_{12} = x_{11} x_{22} - [12|12].
    Bitableau bt(Tableau(std::vector<std::vector<int>>{{2}, {1}}),
                 Tableau(std::vector<std::vector<int>>{{1}, {2}}));
    auto out = straighten(bt, 2, 2);
    REQUIRE(out.size() == 2);
    Bitableau diag = Bitableau::parse("(1/2 | 1/2)");
    Bitableau full = Bitableau::parse("(12 | 12)");
    CHECK(out.at(diag) == 1);
    CHECK(out.at(full) == -1);
    for (const auto& [t, c] : out) CHECK(is_standard(t));
}

TEST_CASE("straighten: the worked 3x5 double tableau") {
    Bitableau bad = Bitableau::parse("(123/123/13/12/1/2 | 123/125/12/23/5/5)");
    CHECK_FALSE(is_standard(bad));
    auto out = straighten(bad, 3, 5);
    CHECK(!out.empty());
    std::mt19937_64 rng(555);
    for (const auto& [t, c] : out) CHECK(is_standard(t));
    for (int trial = 0; trial < 20; ++trial) {
        auto M = random_int_matrix(rng, 3, 5);
        CHECK(eval_bitableau_sum(out, M) == eval_bitableau(bad, M));
    }
    // Idempotent: straightening the straightened sum changes nothing.
    CHECK(straighten(out, 3, 5) == out);
}

TEST_CASE("straighten random bitableaux: sound, standard, idempotent") {
    std::mt19937_64 rng(31337);
    int nonstandard_seen = 0;
    for (int trial = 0; trial < 60; ++trial) {
        Bitableau bt = random_bitableau(rng, 3, 5, 4);
        if (!is_standard(bt)) ++nonstandard_seen;
        auto out = straighten(bt, 3, 5);
        for (const auto& [t, c] : out) CHECK(is_standard(t));
        for (int m = 0; m < 5; ++m) {
            auto M = random_int_matrix(rng, 3, 5);
            CHECK(eval_bitableau_sum(out, M) == eval_bitableau(bt, M));
        }
        CHECK(straighten(out, 3, 5) == out);
    }
    CHECK(nonstandard_seen > 10);
}
