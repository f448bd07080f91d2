#include "apery_table.hpp"

namespace nsg {

bool ideal_power_member(const NumericalSemigroup& s, i64 x, i64 n) {
    if (n < 0) throw std::invalid_argument("ideal power must be nonnegative");
    if (!s.contains(x)) return false;
    if (n == 0) return true;
    return s.order(x) >= n;
}

AperyTable apery_table(const NumericalSemigroup& s) {
    i64 a = s.multiplicity();
    AperyTable t;
    t.multiplicity = a;
    t.rows.push_back(s.apery_min());
    for (;;) {
        const std::vector<i64>& prev = t.rows.back();
        i64 n = (i64)t.rows.size(); // index of the row being built
        std::vector<i64> next((size_t)a);
        bool all_step = true;
        for (i64 i = 0; i < a; ++i) {
            i64 v = prev[(size_t)i];
            if (s.order(v) >= n) { // v stays a member of nM
                next[(size_t)i] = v;
                all_step = false;
            } else {
                next[(size_t)i] = checked_add(v, a);
            }
        }
        if (all_step) break; // previous row already stabilized
        t.rows.push_back(std::move(next));
    }
    t.reduction = (i64)t.rows.size() - 1;
    return t;
}

i64 reduction_number(const NumericalSemigroup& s) {
    return apery_table(s).reduction;
}

i64 hilbert_function(const NumericalSemigroup& s, const AperyTable& t, i64 n) {
    if (n < 0) throw std::invalid_argument("Hilbert argument must be >= 0");
    if (n == 0) return 1;
    if (n >= t.reduction) return t.multiplicity;
    // entries of row n whose order is exactly n (they step to row n+1)
    i64 cnt = 0;
    for (i64 v : t.rows[(size_t)n])
        if (s.order(v) == n) ++cnt;
    return cnt;
}

i64 hilbert_function(const NumericalSemigroup& s, i64 n) {
    return hilbert_function(s, apery_table(s), n);
}

HilbertSeries hilbert_series(const NumericalSemigroup& s,
                             const AperyTable& t) {
    HilbertSeries h;
    h.numerator.resize((size_t)t.reduction + 1);
    i64 prev = 0;
    for (i64 n = 0; n <= t.reduction; ++n) {
        i64 cur = hilbert_function(s, t, n);
        h.numerator[(size_t)n] = cur - prev;
        prev = cur;
    }
    return h;
}

HilbertSeries hilbert_series(const NumericalSemigroup& s) {
    return hilbert_series(s, apery_table(s));
}

} // namespace nsg
