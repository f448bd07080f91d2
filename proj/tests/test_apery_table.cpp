#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "apery_table.hpp"
#include "oracle.hpp"

using namespace nsg;

namespace {

const std::vector<std::vector<i64>> kTuples = {
    {9, 11, 35, 37}, {5, 8, 11, 14}, {5, 8, 19, 22}, {7, 8, 17, 18},
    {6, 11, 16, 20, 25}, {2, 3}, {10, 13}, {4, 7, 9}, {1}};

} // namespace

TEST_CASE("ideal power membership") {
    NumericalSemigroup s({9, 11, 35, 37});
    CHECK(ideal_power_member(s, 70, 0));
    CHECK(ideal_power_member(s, 70, 4));
    CHECK_FALSE(ideal_power_member(s, 70, 5));
    CHECK(ideal_power_member(s, 0, 0));
    CHECK_FALSE(ideal_power_member(s, 0, 1));
    CHECK_FALSE(ideal_power_member(s, 61, 0)); // frobenius number
    CHECK_FALSE(ideal_power_member(s, -4, 0));
    CHECK(ideal_power_member(s, 9, 1));
    CHECK_FALSE(ideal_power_member(s, 9, 2));
    CHECK_THROWS_AS(ideal_power_member(s, 9, -1), std::invalid_argument);
}

TEST_CASE("apery table of <9,11,35,37>, columns by residue mod 9") {
    NumericalSemigroup s({9, 11, 35, 37});
    AperyTable t = apery_table(s);
    CHECK(t.multiplicity == 9);
    CHECK(t.reduction == 8);
    REQUIRE(t.rows.size() == 9);
    CHECK(t.rows[0] == std::vector<i64>{0, 37, 11, 48, 22, 59, 33, 70, 35});
    CHECK(t.rows[4] == std::vector<i64>{36, 55, 38, 66, 40, 68, 42, 70, 44});
    CHECK(t.rows[8] == std::vector<i64>{72, 82, 74, 84, 76, 86, 78, 88, 80});

    // step rule: each cell either stays (order at least n+1) or steps by 9
    for (size_t n = 0; n + 1 < t.rows.size(); ++n)
        for (size_t i = 0; i < 9; ++i) {
            i64 cur = t.rows[n][i], nxt = t.rows[n + 1][i];
            bool stays = s.order(cur) >= (i64)n + 1;
            CHECK(nxt == (stays ? cur : cur + 9));
        }
}

TEST_CASE("small and degenerate tables") {
    NumericalSemigroup s23({2, 3});
    AperyTable t23 = apery_table(s23);
    CHECK(t23.reduction == 1);
    CHECK(t23.rows ==
          std::vector<std::vector<i64>>{{0, 3}, {2, 3}});

    NumericalSemigroup s1({1});
    AperyTable t1 = apery_table(s1);
    CHECK(t1.reduction == 0);
    CHECK(t1.rows == std::vector<std::vector<i64>>{{0}});
    CHECK(reduction_number(s1) == 0);
}

TEST_CASE("tables match the direct brute-force construction") {
    for (const std::vector<i64>& gens : kTuples) {
        NumericalSemigroup s(gens);
        AperyTable t = apery_table(s);
        std::vector<std::vector<i64>> want = oracle::apery_table_direct(gens);
        CHECK(t.rows == want);
        CHECK(t.reduction == oracle::reduction_direct(gens));
        CHECK(reduction_number(s) == t.reduction);
    }
}

TEST_CASE("hilbert function of <9,11,35,37>") {
    NumericalSemigroup s({9, 11, 35, 37});
    AperyTable t = apery_table(s);
    std::vector<i64> want = {1, 4, 5, 6, 7, 7, 7, 8, 9, 9, 9};
    for (i64 n = 0; n <= 10; ++n) {
        CHECK(hilbert_function(s, t, n) == want[(size_t)n]);
        CHECK(hilbert_function(s, n) == want[(size_t)n]);
    }
    CHECK(hilbert_function(s, 100) == 9);

    HilbertSeries h = hilbert_series(s, t);
    CHECK(h.numerator == std::vector<i64>{1, 3, 1, 1, 1, 0, 0, 1, 1});
}

TEST_CASE("hilbert function matches direct enumeration") {
    for (const std::vector<i64>& gens : kTuples) {
        NumericalSemigroup s(gens);
        AperyTable t = apery_table(s);
        i64 nmax = t.reduction + 3;
        std::vector<i64> want = oracle::hilbert_direct(gens, nmax);
        for (i64 n = 0; n <= nmax; ++n)
            CHECK(hilbert_function(s, t, n) == want[(size_t)n]);
    }
}

TEST_CASE("hilbert numerator shape") {
    // degree = reduction number, leading coefficient 1, entries sum to the
    // multiplicity, coefficient of x is e - 1
    for (const std::vector<i64>& gens : kTuples) {
        NumericalSemigroup s(gens);
        AperyTable t = apery_table(s);
        HilbertSeries h = hilbert_series(s, t);
        CHECK(h == hilbert_series(s));
        REQUIRE((i64)h.numerator.size() == t.reduction + 1);
        CHECK(h.numerator[0] == 1);
        if (t.reduction >= 1) {
            CHECK(h.numerator[1] == s.embedding_dimension() - 1);
            CHECK(h.numerator.back() != 0);
        }
        i64 sum = std::accumulate(h.numerator.begin(), h.numerator.end(),
                                  (i64)0);
        CHECK(sum == s.multiplicity());
    }
}
