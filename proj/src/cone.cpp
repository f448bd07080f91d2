#include "cone.hpp"

#include <algorithm>

namespace nsg {

LadderProfile ladder_profile(const AperyTable& t, i64 column) {
    if (column < 1 || column >= t.multiplicity)
        throw std::invalid_argument("ladder column must be in [1, mult-1]");
    LadderProfile lp;
    lp.column = column;
    for (const auto& row : t.rows)
        lp.values.push_back(row[(size_t)column]);

    // maximal runs of >= 2 equal values
    i64 nrows = (i64)lp.values.size();
    i64 start = 0;
    for (i64 k = 1; k <= nrows; ++k) {
        if (k == nrows || lp.values[(size_t)k] != lp.values[(size_t)k - 1]) {
            if (k - 1 > start) lp.landings.push_back({start, k - 1});
            start = k;
        }
    }
    if (lp.landings.empty())
        throw std::logic_error("table column has no landing");
    lp.p = (i64)lp.landings.size() - 1;
    lp.d = lp.landings.back().second;
    for (i64 j = 1; j <= lp.p; ++j) {
        i64 b = lp.landings[(size_t)j - 1].second;
        i64 c = lp.landings[(size_t)j].first - b;
        lp.torsion.push_back({b, c});
    }
    return lp;
}

ConeDecomposition cone_decomposition(const AperyTable& t) {
    ConeDecomposition d;
    d.free_shifts.push_back(0); // the column of multiples of the multiplicity
    for (i64 i = 1; i < t.multiplicity; ++i) {
        LadderProfile lp = ladder_profile(t, i);
        d.free_shifts.push_back(lp.d);
        for (auto& bc : lp.torsion) d.torsion.push_back(bc);
    }
    std::sort(d.free_shifts.begin(), d.free_shifts.end());
    std::sort(d.torsion.begin(), d.torsion.end());
    return d;
}

ConeDecomposition cone_decomposition(const NumericalSemigroup& s) {
    return cone_decomposition(apery_table(s));
}

bool is_tangent_cone_cm(const NumericalSemigroup& s) {
    return cone_decomposition(s).torsion.empty();
}

HilbertSeries cone_hilbert_series(const ConeDecomposition& d) {
    i64 deg = 0;
    for (i64 f : d.free_shifts) deg = std::max(deg, f);
    for (auto& [b, c] : d.torsion) deg = std::max(deg, checked_add(b, c));
    HilbertSeries h;
    h.numerator.assign((size_t)deg + 1, 0);
    for (i64 f : d.free_shifts) h.numerator[(size_t)f] += 1;
    for (auto& [b, c] : d.torsion) {
        h.numerator[(size_t)b] += 1;
        h.numerator[(size_t)(b + c)] -= 1;
    }
    return h;
}

bool nondecreasing_check(const NumericalSemigroup& s) {
    AperyTable t = apery_table(s);
    i64 prev = hilbert_function(s, t, 0);
    for (i64 n = 1; n <= t.reduction + 2; ++n) {
        i64 cur = hilbert_function(s, t, n);
        if (cur < prev) return false;
        prev = cur;
    }
    return true;
}

} // namespace nsg
