#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cone.hpp"
#include "oracle.hpp"

using namespace nsg;

namespace {

const std::vector<std::vector<i64>> kTuples = {
    {9, 11, 35, 37}, {5, 8, 11, 14}, {5, 8, 19, 22}, {7, 8, 17, 18},
    {6, 11, 16, 20, 25}, {2, 3}, {10, 13}, {4, 7, 9}, {1}};

using pairs = std::vector<std::pair<i64, i64>>;

} // namespace

TEST_CASE("ladder profiles of <9,11,35,37>") {
    NumericalSemigroup s({9, 11, 35, 37});
    AperyTable t = apery_table(s);

    LadderProfile c7 = ladder_profile(t, 7); // column of 70
    CHECK(c7.values ==
          std::vector<i64>{70, 70, 70, 70, 70, 79, 88, 88, 88});
    CHECK(c7.landings == pairs{{0, 4}, {6, 8}});
    CHECK(c7.p == 1);
    CHECK(c7.d == 8);
    CHECK(c7.torsion == pairs{{4, 2}});

    LadderProfile c8 = ladder_profile(t, 8); // column of 35
    CHECK(c8.landings == pairs{{0, 1}, {2, 4}});
    CHECK(c8.p == 1);
    CHECK(c8.d == 4);
    CHECK(c8.torsion == pairs{{1, 1}});

    LadderProfile c2 = ladder_profile(t, 2); // column of 11
    CHECK(c2.landings == pairs{{0, 1}});
    CHECK(c2.p == 0);
    CHECK(c2.d == 1);
    CHECK(c2.torsion.empty());

    CHECK_THROWS_AS(ladder_profile(t, 0), std::invalid_argument);
    CHECK_THROWS_AS(ladder_profile(t, 9), std::invalid_argument);
}

TEST_CASE("decomposition of <9,11,35,37>") {
    NumericalSemigroup s({9, 11, 35, 37});
    ConeDecomposition d = cone_decomposition(s);
    CHECK(d.free_shifts == std::vector<i64>{0, 1, 2, 3, 4, 5, 6, 7, 8});
    CHECK(d.torsion == pairs{{1, 1}, {1, 2}, {2, 2}, {3, 2}, {4, 2}});
    CHECK_FALSE(is_tangent_cone_cm(s));

    HilbertSeries fromcone = cone_hilbert_series(d);
    CHECK(fromcone.numerator ==
          std::vector<i64>{1, 3, 1, 1, 1, 0, 0, 1, 1});
    CHECK(fromcone == hilbert_series(s));
}

TEST_CASE("decomposition of small semigroups") {
    NumericalSemigroup s23({2, 3});
    ConeDecomposition d23 = cone_decomposition(s23);
    CHECK(d23.free_shifts == std::vector<i64>{0, 1});
    CHECK(d23.torsion.empty());
    CHECK(is_tangent_cone_cm(s23));
    CHECK(cone_hilbert_series(d23).numerator == std::vector<i64>{1, 1});

    NumericalSemigroup s1({1});
    ConeDecomposition d1 = cone_decomposition(s1);
    CHECK(d1.free_shifts == std::vector<i64>{0});
    CHECK(d1.torsion.empty());
    CHECK(is_tangent_cone_cm(s1));
    CHECK(cone_hilbert_series(d1).numerator == std::vector<i64>{1});

    NumericalSemigroup am({5, 8, 11, 14});
    CHECK(is_tangent_cone_cm(am));
    ConeDecomposition dam = cone_decomposition(am);
    CHECK(dam.free_shifts == std::vector<i64>{0, 1, 1, 1, 2});
    CHECK(dam.torsion.empty());
}

TEST_CASE("decomposition invariants across fixed tuples") {
    for (const std::vector<i64>& gens : kTuples) {
        NumericalSemigroup s(gens);
        AperyTable t = apery_table(s);
        ConeDecomposition d = cone_decomposition(t);

        // one free summand per residue class, shifts within [0, r], and the
        // largest shift is exactly the reduction number
        CHECK((i64)d.free_shifts.size() == s.multiplicity());
        CHECK(std::is_sorted(d.free_shifts.begin(), d.free_shifts.end()));
        CHECK(d.free_shifts.front() == 0);
        CHECK(d.free_shifts.back() == t.reduction);

        // the decomposition reproduces the Hilbert series exactly
        CHECK(cone_hilbert_series(d) == hilbert_series(s, t));

        // CM <=> no torsion, and CM forces a nondecreasing Hilbert function
        CHECK(is_tangent_cone_cm(s) == d.torsion.empty());
        if (d.torsion.empty()) CHECK(nondecreasing_check(s));

        // torsion pairs have positive shift and length
        for (auto& [b, c] : d.torsion) {
            CHECK(b >= 1);
            CHECK(c >= 1);
            CHECK(b + c <= t.reduction);
        }
    }
}

TEST_CASE("nondecreasing hilbert check") {
    // <9,11,35,37> is not CM, yet its Hilbert function never drops
    CHECK(nondecreasing_check(NumericalSemigroup({9, 11, 35, 37})));
    for (const std::vector<i64>& gens : kTuples) {
        NumericalSemigroup s(gens);
        AperyTable t = apery_table(s);
        bool want = true;
        for (i64 n = 0; n <= t.reduction + 1; ++n)
            if (hilbert_function(s, t, n) > hilbert_function(s, t, n + 1))
                want = false;
        CHECK(nondecreasing_check(s) == want);
    }
}
