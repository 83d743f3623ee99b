#ifndef GDWN_WYTHOFF_HPP
#define GDWN_WYTHOFF_HPP

#include <cstdint>
#include <vector>

#include "gdwn/errors.hpp"
#include "gdwn/game.hpp"
#include "gdwn/intmath.hpp"

namespace gdwn {

/**
 * Golden-ratio Beatty pair: A = floor(phi*n), B = A + n, Delta = n.
 *
 * Everything is computed through the identity floor(phi*n) =
 * (n + isqrt(5*n^2)) / 2, so no floating point and no stored irrational
 * constant appear anywhere on this path.
 */
struct BeattyPair {
    u64 n = 0;
    u64 a = 0;
    u64 b = 0;
    u64 delta = 0;
};

/// Largest n for which the 128-bit intermediate 5*n^2 is computable.
inline constexpr u64 kBeattyMaxN = 8249634742471189717ULL; // floor(sqrt((2^128-1)/5))

inline u64 beatty_a(u64 n) {
    if (n > kBeattyMaxN)
        throw RangeError("beatty_a: 5*n^2 exceeds 128 bits for n=" + std::to_string(n));
    const u128 five_n_sq = u128(5) * (u128(n) * n);
    // the sum can pass 2^64 near the top of the range; divide in 128 bits
    return static_cast<u64>((u128(n) + isqrt_u128(five_n_sq)) / 2);
}

inline u64 beatty_b(u64 n) {
    const u64 a = beatty_a(n);
    if (a > UINT64_MAX - n)
        throw RangeError("beatty_b: A(n) + n exceeds 64 bits for n=" + std::to_string(n));
    return a + n;
}

inline BeattyPair beatty_pair(u64 n) {
    const u64 a = beatty_a(n);
    if (a > UINT64_MAX - n)
        throw RangeError("beatty_pair: A(n) + n exceeds 64 bits for n=" + std::to_string(n));
    return {n, a, a + n, n};
}

/// All Beatty pairs with index n in [0, max_n].
inline std::vector<BeattyPair> beatty_table(u64 max_n) {
    std::vector<BeattyPair> out;
    out.reserve(static_cast<std::size_t>(max_n) + 1);
    for (u64 n = 0; n <= max_n; ++n) out.push_back(beatty_pair(n));
    return out;
}

/**
 * Exact Wythoff Nim P-test: canonical(pos) equals (A(n), B(n)) with
 * n = y - x.
 *
 * Total over all 64-bit inputs: for n > 7.2e18 the matching B(n) = A(n)+n
 * exceeds 2^64-1, so no representable position with that coordinate
 * difference is P and the answer is false without evaluating A(n).
 */
inline bool is_wythoff_p(Position pos) {
    const Position c = canonical(pos);
    const u64 n = c.y - c.x;
    constexpr u64 kUnreachableDelta = 7200000000000000000ULL;
    if (n > kUnreachableDelta) return false;
    return beatty_a(n) == c.x;
}

} // namespace gdwn

#endif
