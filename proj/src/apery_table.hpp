#ifndef NS_APERY_TABLE_HPP
#define NS_APERY_TABLE_HPP

// Apery table of a numerical semigroup w.r.t. its multiplicity: row n holds
// the Apery set of the n-th power of the maximal ideal, columns indexed by
// residue mod the multiplicity. Row 0 is the ordinary Apery set; the table
// has r+1 rows where r is the reduction number (least n with row n+1 equal to
// row n shifted by the multiplicity in every column). Also: Hilbert function
// and series read off the table.

#include "semigroup.hpp"

namespace nsg {

struct AperyTable {
    i64 multiplicity = 0;
    i64 reduction = 0;                    // r
    std::vector<std::vector<i64>> rows;   // (r+1) x multiplicity, residue order
};

// x in nM? (n = 0: membership in S; n >= 1: member with order >= n)
bool ideal_power_member(const NumericalSemigroup& s, i64 x, i64 n);

AperyTable apery_table(const NumericalSemigroup& s);

i64 reduction_number(const NumericalSemigroup& s);

// H(n) = #(nM \ (n+1)M); H(0) = 1, H(n) = multiplicity for n >= r
i64 hilbert_function(const NumericalSemigroup& s, const AperyTable& t, i64 n);
i64 hilbert_function(const NumericalSemigroup& s, i64 n);

// numerator of sum_n H(n) x^n written as numerator/(1-x); degree = reduction
// number, coefficients sum to the multiplicity
struct HilbertSeries {
    std::vector<i64> numerator;

    bool operator==(const HilbertSeries&) const = default;
};

HilbertSeries hilbert_series(const NumericalSemigroup& s, const AperyTable& t);
HilbertSeries hilbert_series(const NumericalSemigroup& s);

} // namespace nsg

#endif
