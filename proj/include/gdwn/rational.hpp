#ifndef GDWN_RATIONAL_HPP
#define GDWN_RATIONAL_HPP

#include <cstdint>
#include <string>

#include "gdwn/errors.hpp"
#include "gdwn/intmath.hpp"

namespace gdwn {

/**
 * Exact nonnegative rational for ratio thresholds. Kept small on purpose:
 * the analysis code only needs construction, addition, and comparisons
 * against coordinate ratios b/a, all via cross multiplication.
 */
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) throw ValidationError("rational with zero denominator");
        if (num < 0 || den < 0) throw ValidationError("rational must be nonnegative");
        reduce();
    }

    void reduce() {
        const u64 g = gcd_u64(static_cast<u64>(num), static_cast<u64>(den));
        if (g > 1) {
            num /= static_cast<std::int64_t>(g);
            den /= static_cast<std::int64_t>(g);
        }
    }

    bool positive() const { return num > 0; }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    Rational operator+(const Rational& o) const {
        const i128 n = i128(num) * o.den + i128(o.num) * den;
        const i128 d = i128(den) * o.den;
        if (n > INT64_MAX || d > INT64_MAX)
            throw ValidationError("rational addition overflow");
        return Rational(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
    }

    friend bool operator==(const Rational&, const Rational&) = default;
};

/// b/a versus r: negative, zero, or positive as b/a <=> r. Requires a >= 1.
inline int compare_ratio(u64 b, u64 a, const Rational& r) {
    const u128 lhs = u128(b) * static_cast<u64>(r.den);
    const u128 rhs = u128(static_cast<u64>(r.num)) * a;
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

/**
 * Parses "2", "0.05", or "3/2" into an exact rational. Decimal literals are
 * exact (digits over a power of ten); no floating point is involved.
 */
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ValidationError("empty rational");
    const auto parse_int = [&](const std::string& s) -> std::int64_t {
        if (s.empty()) throw ValidationError("bad rational '" + text + "'");
        for (char c : s)
            if (c < '0' || c > '9') throw ValidationError("bad rational '" + text + "'");
        if (s.size() > 18) throw ValidationError("rational too large: '" + text + "'");
        return std::stoll(s);
    };
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const std::int64_t n = parse_int(text.substr(0, slash));
        const std::int64_t d = parse_int(text.substr(slash + 1));
        if (d == 0) throw ValidationError("rational with zero denominator: '" + text + "'");
        return Rational(n, d);
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(parse_int(text), 1);
    const std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    if (frac.size() > 12) throw ValidationError("too many decimal places: '" + text + "'");
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const std::int64_t w = whole.empty() ? 0 : parse_int(whole);
    const std::int64_t f = frac.empty() ? 0 : parse_int(frac);
    if (w > (INT64_MAX - f) / den) throw ValidationError("rational too large: '" + text + "'");
    return Rational(w * den + f, den);
}

inline std::string to_string(const Rational& r) {
    if (r.den == 1) return std::to_string(r.num);
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

} // namespace gdwn

#endif
