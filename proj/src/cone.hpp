#ifndef NS_CONE_HPP
#define NS_CONE_HPP

// Ladder analysis of Apery-table columns and the resulting decomposition of
// the tangent cone's maximal-ideal filtration into free and torsion
// summands: each nonzero column contributes one free summand shifted by the
// end row d of its last landing, and one torsion summand (b_j, c_j) per
// consecutive landing pair. The cone is Cohen-Macaulay exactly when no
// torsion summand appears.

#include "apery_table.hpp"

namespace nsg {

struct LadderProfile {
    i64 column = 0;                                // residue index, >= 1
    std::vector<i64> values;                       // the table column
    std::vector<std::pair<i64, i64>> landings;     // (start,end) rows, len>=2
    i64 p = 0;                                     // #landings - 1
    i64 d = 0;                                     // end row of last landing
    std::vector<std::pair<i64, i64>> torsion;      // (b_j, c_j), j = 1..p
};

LadderProfile ladder_profile(const AperyTable& t, i64 column);

struct ConeDecomposition {
    std::vector<i64> free_shifts;             // ascending, one per column
    std::vector<std::pair<i64, i64>> torsion; // (shift, length), sorted

    bool operator==(const ConeDecomposition&) const = default;
};

ConeDecomposition cone_decomposition(const AperyTable& t);
ConeDecomposition cone_decomposition(const NumericalSemigroup& s);

bool is_tangent_cone_cm(const NumericalSemigroup& s);

// numerator of the Hilbert series implied by a decomposition:
// each free shift d contributes x^d, each torsion pair (b,c) contributes
// x^b - x^(b+c); denominator (1-x)
HilbertSeries cone_hilbert_series(const ConeDecomposition& d);

// H(n) <= H(n+1) for 0 <= n <= r+1 (always true when the cone is CM)
bool nondecreasing_check(const NumericalSemigroup& s);

} // namespace nsg

#endif
