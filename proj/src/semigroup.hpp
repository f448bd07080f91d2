#ifndef NS_SEMIGROUP_HPP
#define NS_SEMIGROUP_HPP

// Numerical semigroup core: validated construction from a minimal generating
// tuple, Apery sets, membership, Frobenius number, factorizations, maximal
// factorization length (order), length sets, symmetry and homogeneity.
//
// A value is immutable after construction. The lazily grown order/min-length
// cache sits behind a mutex and is shared by copies, so values can be used
// from several threads at once.

#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "checked.hpp"

namespace nsg {

struct SemigroupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// gcd of the generator tuple is not 1
struct GcdNotOne : SemigroupError {
    i64 gcd;
    explicit GcdNotOne(i64 g)
        : SemigroupError("generators have gcd " + std::to_string(g) +
                         ", expected 1"),
          gcd(g) {}
};

// some generator is a sum of the others
struct NotMinimal : SemigroupError {
    i64 offender;
    explicit NotMinimal(i64 g)
        : SemigroupError("generator " + std::to_string(g) +
                         " is redundant: it lies in the semigroup generated "
                         "by the others"),
          offender(g) {}
};

// an operation was asked about an integer outside the semigroup
struct NotAMember : SemigroupError {
    i64 value;
    explicit NotAMember(i64 x)
        : SemigroupError(std::to_string(x) +
                         " is not a member of the semigroup"),
          value(x) {}
};

// one factorization: x = sum exponents[i] * generators[i]
struct Factorization {
    std::vector<i64> exponents;
    i64 value = 0;
    i64 length = 0; // sum of exponents

    bool operator==(const Factorization&) const = default;
};

struct ElementProfile {
    i64 element = 0;
    i64 order = 0;               // max factorization length
    std::vector<i64> length_set; // sorted ascending
};

class NumericalSemigroup {
  public:
    // Validates: nonempty, all positive, gcd 1, minimal generating tuple
    // (throws GcdNotOne / NotMinimal / std::invalid_argument). The tuple (1)
    // is accepted and yields the full semigroup of nonnegative integers.
    explicit NumericalSemigroup(std::vector<i64> generators);

    const std::vector<i64>& generators() const { return gens_; }
    i64 multiplicity() const { return gens_.front(); }
    i64 embedding_dimension() const { return (i64)gens_.size(); }

    // least semigroup element in each residue class mod multiplicity;
    // index = residue. This is the Apery set w.r.t. the multiplicity.
    const std::vector<i64>& apery_min() const { return apmin_; }

    // Apery set w.r.t. an arbitrary nonzero member a, sorted ascending.
    // Throws NotAMember if a is not a nonzero member.
    std::vector<i64> apery_set(i64 a) const;

    bool contains(i64 x) const;

    // largest integer outside the semigroup; -1 for the full semigroup <1>
    i64 frobenius() const;

    // maximal factorization length of a member (throws NotAMember otherwise)
    i64 order(i64 x) const;
    // minimal factorization length of a member
    i64 min_length(i64 x) const;

    // all factorizations of x, lexicographically ascending on the exponent
    // tuple; empty iff x is not a member (x must be >= 0)
    std::vector<Factorization> factorizations(i64 x) const;

    // sorted set of factorization lengths of a member
    std::vector<i64> length_set(i64 x) const;

    ElementProfile element_profile(i64 x) const;

    // every nonzero Apery element (w.r.t. the multiplicity) has a singleton
    // length set
    bool is_homogeneous() const;

    // x in S  <=>  F - x not in S, for 0 <= x <= F
    bool is_symmetric() const;

  private:
    struct OrderCache {
        std::mutex mtx;
        std::vector<int> ord;     // -1 for non-members
        std::vector<int> minlen;  // -1 for non-members
    };

    void ensure_order_cache(i64 bound) const;

    std::vector<i64> gens_;
    std::vector<i64> apmin_;
    std::shared_ptr<OrderCache> cache_;
};

// dist[r] = least element of the semigroup generated by gens (plus the
// modulus a itself is NOT implied: include it in gens if wanted) congruent to
// r mod a; INT64_MAX where the residue class is unreachable. Exposed for the
// minimality check and reused by apery_set.
std::vector<i64> apery_distances(const std::vector<i64>& gens, i64 a);

} // namespace nsg

#endif
