#ifndef NS_CHECKED_HPP
#define NS_CHECKED_HPP

// Overflow-checked 64-bit arithmetic. Every sum/product on semigroup elements
// goes through these so magnitudes near 2^40 are safe and anything larger
// fails loudly instead of wrapping.

#include <stdexcept>

namespace nsg {

using i64 = long long;

inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

inline i64 checked_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in subtraction");
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

} // namespace nsg

#endif
