#ifndef GDWN_INTMATH_HPP
#define GDWN_INTMATH_HPP

#include <bit>
#include <cstdint>

#include "gdwn/errors.hpp"

namespace gdwn {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

inline int bit_width_u128(u128 v) {
    const u64 hi = static_cast<u64>(v >> 64);
    if (hi != 0) return 64 + std::bit_width(hi);
    return std::bit_width(static_cast<u64>(v));
}

/**
 * floor(sqrt(n)) for 128-bit n, exact.
 *
 * Newton iteration from a power-of-two seed >= sqrt(n), followed by a
 * division-based floor correction so no intermediate square can overflow.
 */
inline u64 isqrt_u128(u128 n) {
    if (n < 2) return static_cast<u64>(n);
    u128 x = u128(1) << ((bit_width_u128(n) + 1) / 2); // x >= sqrt(n)
    for (;;) {
        const u128 next = (x + n / x) >> 1;
        if (next >= x) break;
        x = next;
    }
    // x is within one of the root; fix the floor without squaring above 2^128
    while (x > n / x) --x;
    while (x + 1 <= n / (x + 1)) ++x;
    return static_cast<u64>(x);
}

inline u64 isqrt_u64(u64 n) { return isqrt_u128(n); }

inline u64 gcd_u64(u64 a, u64 b) {
    while (b != 0) {
        const u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// a*b with overflow detection, for validating table-key arithmetic.
inline bool mul_overflows_u64(u64 a, u64 b) {
    if (a == 0 || b == 0) return false;
    return a > UINT64_MAX / b;
}

} // namespace gdwn

#endif
