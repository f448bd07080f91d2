#ifndef NS_FAMILIES_HPP
#define NS_FAMILIES_HPP

// Three published families of numerical semigroups with closed-form claims
// for Apery sets, element orders, Apery tables, order counts, tangent-cone
// decompositions and Hilbert series:
//   symmetric(e,q,d): multiplicity m = e+2q+1, generators
//     {m, m+d} u {(q+1)m+(q+i-1)d : 3 <= i <= e}; never Cohen-Macaulay.
//   almost_maximal(e,d,b): multiplicity a = e+1, generators
//     {a, a+d, ..., a+(e-3)d, b, b+d}; Cohen-Macaulay while
//     b < 2a+(a-3)d (the published forms fail beyond that bound).
//   unbounded(n,e) for e in {4,5}: reduction number n grows without bound;
//     always Cohen-Macaulay.
// predict_family assembles the published values; verify_family diffs them
// against the engine and classifies each discrepancy against the built-in
// list of known errata in the published closed forms.

#include <map>
#include <optional>

#include "cone.hpp"

namespace nsg {

// family parameters outside the family's domain
struct BadParameter : SemigroupError {
    using SemigroupError::SemigroupError;
};

// spec constructible but not covered by any published case split
struct UncoveredCase : SemigroupError {
    using SemigroupError::SemigroupError;
};

enum class FamilyKind { symmetric, almost_maximal, unbounded };

std::string family_kind_name(FamilyKind k);

enum class AmCase { case_i, case_ii, uncovered };

struct FamilySpec {
    FamilyKind kind = FamilyKind::symmetric;
    i64 e = 0, q = 0, d = 0, b = 0, n = 0; // whichever apply to the kind
    std::vector<i64> gens;                 // validated minimal tuple
    AmCase tag = AmCase::uncovered;        // almost_maximal only

    std::string name() const; // e.g. "symmetric(e=4,q=2,d=2)"
};

FamilySpec make_symmetric(i64 e, i64 q, i64 d);
FamilySpec make_almost_maximal(i64 e, i64 d, i64 b);
FamilySpec make_unbounded(i64 n, i64 e);

// Published values for one spec. A field is empty/absent when the family has
// no published closed form for it.
struct Prediction {
    std::vector<i64> apery_layout;        // published column order; 0 first
    std::map<i64, i64> orders;            // element -> published order
    std::vector<std::vector<i64>> table;  // published layout; empty if none
    std::map<i64, i64> order_counts;      // order -> count; empty if none
    std::optional<ConeDecomposition> decomposition;
    std::vector<i64> hilbert_values;      // H(0..r); empty if none
    std::vector<i64> hilbert_numerator;   // empty if none
};

Prediction predict_family(const FamilySpec& spec);

struct DiscrepancyEntry {
    std::string aspect;
    std::string paper;    // published value
    std::string computed; // engine value
    std::string citation;
    bool known = false;   // matches the built-in errata list
};

enum class Verdict { clean, known_errata_only, unexpected };

std::string verdict_name(Verdict v);

struct DiscrepancyReport {
    FamilySpec spec;
    Verdict verdict = Verdict::clean;
    std::vector<DiscrepancyEntry> entries;
};

DiscrepancyReport verify_family(const FamilySpec& spec);

// engine table with columns permuted into a published layout order
// (layout[i] selects the column of residue layout[i] mod multiplicity)
std::vector<std::vector<i64>> table_in_layout(const AperyTable& t,
                                              const std::vector<i64>& layout);

// inclusive parameter range
struct Range {
    i64 lo = 0;
    i64 hi = -1;
};

// Sweeps enumerate valid specs deterministically, skipping parameter
// combinations the constructors reject.
std::vector<FamilySpec> sweep_symmetric(Range e, Range q, Range d);
// default (no d/b ranges): per e, the first per_e pairs ordered by b then d
std::vector<FamilySpec> sweep_almost_maximal(Range e, std::optional<Range> d,
                                             std::optional<Range> b,
                                             i64 per_e = 20);
// default n ranges: e=4 -> 5..9, e=5 -> 8..12 (even)
std::vector<FamilySpec> sweep_unbounded(Range e, std::optional<Range> n);

} // namespace nsg

#endif
