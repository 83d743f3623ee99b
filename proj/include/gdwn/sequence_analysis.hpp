#ifndef GDWN_SEQUENCE_ANALYSIS_HPP
#define GDWN_SEQUENCE_ANALYSIS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "gdwn/errors.hpp"
#include "gdwn/sequence.hpp"
#include "gdwn/wythoff.hpp"

namespace gdwn {

// ---------------------------------------------------------------------------
// Property W
// ---------------------------------------------------------------------------

enum class PropertyWViolation {
    not_increasing,
    not_strict_pair,
    not_complementary,
    duplicate_delta,
};

inline const char* to_string(PropertyWViolation v) {
    switch (v) {
        case PropertyWViolation::not_increasing: return "not_increasing";
        case PropertyWViolation::not_strict_pair: return "not_strict_pair";
        case PropertyWViolation::not_complementary: return "not_complementary";
        case PropertyWViolation::duplicate_delta: return "duplicate_delta";
    }
    return "?";
}

struct PropertyWReport {
    struct Violation {
        PropertyWViolation kind;
        std::size_t index_i = 0;
        std::optional<std::size_t> index_j;
        std::optional<u64> value; // offending coordinate value, where meaningful
    };

    bool ok = true;
    std::optional<Violation> violation;
};

/**
 * Checks the finite prefix of an upper P-position coding:
 *
 *   - the a-sequence is strictly increasing,
 *   - a_n < b_n for n >= 1,
 *   - finite-prefix complementarity: every integer in [1, a_max] occurs
 *     exactly once across {a} and {b}, and no value repeats above a_max,
 *   - all coordinate differences b_n - a_n (n >= 1) are distinct.
 *
 * Scan order is deterministic: indices increase, and at each index the
 * order is not_increasing, not_strict_pair, duplicate_delta; the
 * complementarity summary runs last (it is a whole-prefix property).
 * Index conventions for not_complementary: a duplicated value reports the
 * two pair indices involved; a missing value <= a_max reports the first
 * pair index whose a-coordinate exceeds it, plus the value itself.
 *
 * Input that is not even a coding (empty, or not starting at the origin)
 * is a validation error rather than a violation.
 */
inline PropertyWReport check_property_w(std::span<const PPair> pairs) {
    if (pairs.empty()) throw ValidationError("empty pair list");
    if (pairs[0].a != 0 || pairs[0].b != 0)
        throw ValidationError("pair list must start with the origin (0,0)");

    PropertyWReport report;
    const auto violate = [&](PropertyWViolation kind, std::size_t i,
                             std::optional<std::size_t> j = std::nullopt,
                             std::optional<u64> value = std::nullopt) {
        report.ok = false;
        report.violation = PropertyWReport::Violation{kind, i, j, value};
    };

    std::unordered_map<u64, std::size_t> delta_seen;
    for (std::size_t n = 1; n < pairs.size(); ++n) {
        if (pairs[n].a <= pairs[n - 1].a) {
            violate(PropertyWViolation::not_increasing, n, std::nullopt, pairs[n].a);
            return report;
        }
        if (pairs[n].a >= pairs[n].b) {
            violate(PropertyWViolation::not_strict_pair, n, std::nullopt, pairs[n].b);
            return report;
        }
        const auto [it, fresh] = delta_seen.emplace(pairs[n].delta(), n);
        if (!fresh) {
            violate(PropertyWViolation::duplicate_delta, it->second, n, pairs[n].delta());
            return report;
        }
    }

    // complementarity over the finite prefix; sort-based so sparse inputs
    // with large coordinates cannot demand a value-indexed bitmap
    const u64 a_max = pairs.back().a;
    std::unordered_map<u64, std::size_t> owner; // value -> pair index
    std::vector<u64> low_values;                // values <= a_max
    for (std::size_t n = 1; n < pairs.size(); ++n) {
        for (const u64 v : {pairs[n].a, pairs[n].b}) {
            const auto [it, fresh] = owner.emplace(v, n);
            if (!fresh) {
                violate(PropertyWViolation::not_complementary, it->second, n, v);
                return report;
            }
            if (v <= a_max) low_values.push_back(v);
        }
    }
    std::sort(low_values.begin(), low_values.end());
    u64 missing = 0;
    for (std::size_t i = 0; i < low_values.size(); ++i) {
        if (low_values[i] != i + 1) {
            missing = i + 1;
            break;
        }
    }
    if (missing == 0 && low_values.size() < a_max) missing = low_values.size() + 1;
    if (missing != 0) {
        const auto after = std::find_if(pairs.begin(), pairs.end(),
                                        [&](const PPair& pr) { return pr.a > missing; });
        violate(PropertyWViolation::not_complementary,
                static_cast<std::size_t>(after - pairs.begin()), std::nullopt, missing);
    }
    return report;
}

// ---------------------------------------------------------------------------
// Partial sums against the Beatty sequences
// ---------------------------------------------------------------------------

struct PartialSumReport {
    bool ok = true;
    std::size_t prefix_length = 0; // pairs checked, including the origin
    // tightest margins: sum(A)-sum(a) and sum(b)-sum(B), with where they occur
    std::int64_t min_margin_a = 0;
    std::size_t argmin_a = 0;
    std::int64_t min_margin_b = 0;
    std::size_t argmin_b = 0;
    std::optional<std::size_t> first_violation; // prefix index, if any margin < 0
};

/**
 * For every prefix, compares the coordinate sums against the Wythoff
 * sums: sum A_i >= sum a_i and sum B_i <= sum b_i. The caller's data must
 * pass check_property_w first; anything else is refused.
 */
inline PartialSumReport partial_sum_compare(std::span<const PPair> pairs) {
    const PropertyWReport w = check_property_w(pairs);
    if (!w.ok)
        throw ValidationError(std::string("partial_sum_compare requires Property W; got ") +
                              to_string(w.violation->kind) + " at index " +
                              std::to_string(w.violation->index_i));

    PartialSumReport report;
    report.prefix_length = pairs.size();
    i128 sum_a = 0, sum_b = 0, sum_beatty_a = 0, sum_beatty_b = 0;
    bool first = true;
    for (std::size_t n = 0; n < pairs.size(); ++n) {
        sum_a += pairs[n].a;
        sum_b += pairs[n].b;
        const BeattyPair w_pair = beatty_pair(n);
        sum_beatty_a += w_pair.a;
        sum_beatty_b += w_pair.b;
        const i128 margin_a = sum_beatty_a - sum_a;
        const i128 margin_b = sum_b - sum_beatty_b;
        if (first || margin_a < report.min_margin_a) {
            report.min_margin_a = static_cast<std::int64_t>(margin_a);
            report.argmin_a = n;
        }
        if (first || margin_b < report.min_margin_b) {
            report.min_margin_b = static_cast<std::int64_t>(margin_b);
            report.argmin_b = n;
        }
        first = false;
        if ((margin_a < 0 || margin_b < 0) && !report.first_violation) {
            report.ok = false;
            report.first_violation = n;
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Density profile
// ---------------------------------------------------------------------------

struct DensitySample {
    u64 n = 0;       // sample point N
    u64 count_x = 0; // #{i >= 1 : a_i < N}
    u64 count_y = 0; // #{i >= 1 : b_i < N}

    double tau() const { return static_cast<double>(count_x) / static_cast<double>(n); }
    double tau_y() const { return static_cast<double>(count_y) / static_cast<double>(n); }
};

struct DensityProfile {
    std::vector<DensitySample> samples;
    // minimum tau over the second half of the sample list (exact comparison)
    std::optional<DensitySample> min_tau_tail;
};

/**
 * tau(N) = #{i >= 1 : a_i < N} / N at each sample point, plus the y-side
 * analogue. Requires the pair list to cover every upper P-position with
 * a-coordinate below max(sample_points): sample points beyond a_last + 1
 * are a range error because the count there would be incomplete.
 */
inline DensityProfile density_profile(std::span<const PPair> pairs,
                                      std::span<const u64> sample_points) {
    const u64 a_last = pairs.empty() ? 0 : pairs.back().a;
    std::vector<u64> as, bs;
    as.reserve(pairs.size());
    bs.reserve(pairs.size());
    for (std::size_t n = 1; n < pairs.size(); ++n) {
        as.push_back(pairs[n].a);
        bs.push_back(pairs[n].b);
    }
    std::sort(bs.begin(), bs.end()); // a is increasing already for valid data
    std::sort(as.begin(), as.end());

    DensityProfile profile;
    for (const u64 n : sample_points) {
        if (n == 0) throw ValidationError("density sample point must be positive");
        if (n > a_last + 1)
            throw RangeError("density sample point " + std::to_string(n) +
                             " exceeds the computed range (max a = " + std::to_string(a_last) +
                             ")");
        DensitySample s;
        s.n = n;
        s.count_x = static_cast<u64>(std::lower_bound(as.begin(), as.end(), n) - as.begin());
        s.count_y = static_cast<u64>(std::lower_bound(bs.begin(), bs.end(), n) - bs.begin());
        profile.samples.push_back(s);
    }

    const std::size_t half = profile.samples.size() / 2;
    for (std::size_t i = half; i < profile.samples.size(); ++i) {
        const DensitySample& s = profile.samples[i];
        if (!profile.min_tau_tail ||
            u128(s.count_x) * profile.min_tau_tail->n <
                u128(profile.min_tau_tail->count_x) * s.n) {
            profile.min_tau_tail = s;
        }
    }
    return profile;
}

// ---------------------------------------------------------------------------
// Distinct-difference orderings
// ---------------------------------------------------------------------------

struct OrderingResult {
    bool exists = false;
    // witness[i] pairs with S[i]; empty when no ordering exists
    std::vector<u64> witness;
};

namespace detail {

/**
 * Exact backtracking search for an injective assignment t: S -> T with all
 * differences t(s) - s pairwise distinct (and positive when required).
 * Candidates are tried in increasing order, which finds complementary-
 * sequence witnesses quickly; a node budget guards degenerate instances.
 * Both value-injectivity and difference-injectivity must hold at once, so
 * this is a constrained assignment problem, not a plain bipartite
 * matching; the search is exhaustive up to sound pruning.
 */
class OrderingSearch {
public:
    OrderingSearch(std::span<const u64> s, std::vector<u64> t, u64 horizon,
                   bool require_positive, u64 node_budget)
        : s_(s), t_(std::move(t)), require_positive_(require_positive),
          node_budget_(node_budget), t_used_(t_.size(), 0),
          diff_used_(2 * static_cast<std::size_t>(horizon) + 1, 0), horizon_(horizon) {}

    std::optional<std::vector<u64>> run() {
        assignment_.assign(s_.size(), 0);
        if (dfs(0)) return assignment_;
        return std::nullopt;
    }

private:
    bool dfs(std::size_t i) {
        if (i == s_.size()) return true;
        if (++nodes_ > node_budget_)
            throw ResourceError("ordering search exceeded its node budget");
        for (std::size_t j = 0; j < t_.size(); ++j) {
            if (t_used_[j]) continue;
            const std::int64_t d =
                static_cast<std::int64_t>(t_[j]) - static_cast<std::int64_t>(s_[i]);
            if (require_positive_ && d <= 0) continue;
            const std::size_t slot = static_cast<std::size_t>(d + static_cast<std::int64_t>(horizon_));
            if (diff_used_[slot]) continue;
            t_used_[j] = 1;
            diff_used_[slot] = 1;
            assignment_[i] = t_[j];
            if (dfs(i + 1)) return true;
            t_used_[j] = 0;
            diff_used_[slot] = 0;
        }
        return false;
    }

    std::span<const u64> s_;
    std::vector<u64> t_;
    bool require_positive_;
    u64 node_budget_;
    std::vector<std::uint8_t> t_used_;
    std::vector<std::uint8_t> diff_used_;
    u64 horizon_;
    u64 nodes_ = 0;
    std::vector<u64> assignment_;
};

} // namespace detail

/**
 * Decides whether the elements of S (within {1..horizon}) admit an
 * injective assignment into the complement {1..horizon} \ S with all
 * differences t(s) - s pairwise distinct. Differences may be negative
 * unless require_positive_differences is set. The horizon must leave at
 * least |S| complement elements. Returns a witness when one exists.
 */
inline OrderingResult distinct_difference_ordering_exists(
    std::span<const u64> s, u64 horizon, bool require_positive_differences = false,
    u64 node_budget = 50'000'000) {
    if (horizon > 10'000'000)
        throw ResourceError("ordering horizon " + std::to_string(horizon) +
                            " beyond the supported search range");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 1 || s[i] > horizon)
            throw ValidationError("set element " + std::to_string(s[i]) +
                                  " outside {1..horizon}");
        if (i > 0 && s[i] <= s[i - 1])
            throw ValidationError("set must be strictly increasing");
    }
    std::vector<u64> complement;
    {
        std::size_t k = 0;
        for (u64 v = 1; v <= horizon; ++v) {
            if (k < s.size() && s[k] == v) {
                ++k;
                continue;
            }
            complement.push_back(v);
        }
    }
    if (complement.size() < s.size())
        throw RangeError("horizon " + std::to_string(horizon) + " leaves only " +
                         std::to_string(complement.size()) + " complement elements for " +
                         std::to_string(s.size()) + " set elements");

    detail::OrderingSearch search(s, std::move(complement), horizon,
                                  require_positive_differences, node_budget);
    OrderingResult result;
    if (auto witness = search.run()) {
        result.exists = true;
        result.witness = std::move(*witness);
    }
    return result;
}

} // namespace gdwn

#endif
