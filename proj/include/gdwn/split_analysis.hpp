#ifndef GDWN_SPLIT_ANALYSIS_HPP
#define GDWN_SPLIT_ANALYSIS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gdwn/errors.hpp"
#include "gdwn/rational.hpp"
#include "gdwn/sequence.hpp"

namespace gdwn {

// ---------------------------------------------------------------------------
// Sector census
// ---------------------------------------------------------------------------

/**
 * Exact classification of every pair (n >= 1) against the ratio sector
 * [alpha, alpha + epsilon]: every comparison is an integer cross
 * multiplication, so the census is reproducible bit for bit.
 */
struct SectorCensus {
    Rational alpha;
    Rational epsilon;
    std::vector<std::size_t> hits; // indices with alpha <= b/a <= alpha+epsilon
    std::optional<std::size_t> last_hit_index;
    u64 total_below = 0; // b/a < alpha
    u64 total_above = 0; // b/a > alpha+epsilon
    u64 total_pairs = 0; // indices n >= 1 classified
};

inline SectorCensus sector_census(std::span<const PPair> pairs, const Rational& alpha,
                                  const Rational& epsilon) {
    if (pairs.empty()) throw ValidationError("sector census of an empty pair list");
    if (!alpha.positive()) throw ValidationError("alpha must be positive");
    if (!epsilon.positive()) throw ValidationError("epsilon must be positive");

    SectorCensus census;
    census.alpha = alpha;
    census.epsilon = epsilon;
    const Rational upper = alpha + epsilon;
    for (std::size_t n = 1; n < pairs.size(); ++n) {
        if (pairs[n].a == 0) throw ValidationError("zero a-coordinate beyond the origin");
        ++census.total_pairs;
        if (compare_ratio(pairs[n].b, pairs[n].a, alpha) < 0) {
            ++census.total_below;
        } else if (compare_ratio(pairs[n].b, pairs[n].a, upper) > 0) {
            ++census.total_above;
        } else {
            census.hits.push_back(n);
            census.last_hit_index = n;
        }
    }
    return census;
}

// ---------------------------------------------------------------------------
// Upper beam and its recurrence
// ---------------------------------------------------------------------------

/// Indices n with b_n/a_n strictly above the slope threshold q/p.
struct UpperBeam {
    Coord p = 1;
    Coord q = 2;
    std::vector<std::size_t> k_indices;
    std::size_t recurrence_ok_upto = 0; // filled in by verify_recurrence
};

inline UpperBeam upper_indices(std::span<const PPair> pairs, Coord p, Coord q) {
    if (p < 1 || q < 1) throw ValidationError("threshold requires positive p and q");
    UpperBeam beam;
    beam.p = p;
    beam.q = q;
    for (std::size_t n = 1; n < pairs.size(); ++n) {
        if (pairs[n].a == 0) throw ValidationError("zero a-coordinate beyond the origin");
        // b/a > q/p  <=>  b*p > q*a
        if (u128(pairs[n].b) * p > u128(q) * pairs[n].a) beam.k_indices.push_back(n);
    }
    return beam;
}

struct RecurrenceReport {
    bool ok = true;
    std::size_t checked = 0; // consecutive beam-index pairs verified
    std::optional<std::size_t> first_failure; // beam position i where (k_i, k_i+1) fails
    std::size_t recurrence_ok_upto = 0;       // last sequence index whose step verified
};

/**
 * Checks b_{k_{i+1}} = 2*(a_{k_{i+1}} - a_{k_i}) + b_{k_i} + 1 for every
 * consecutive pair of beam indices. The relation is specific to the
 * (1,2) ruleset; callers solve with gdwn:1,2 before invoking. A beam with
 * fewer than two indices verifies vacuously.
 */
inline RecurrenceReport verify_recurrence(std::span<const PPair> pairs, UpperBeam& beam) {
    RecurrenceReport report;
    for (std::size_t i = 0; i + 1 < beam.k_indices.size(); ++i) {
        const PPair& lo = pairs[beam.k_indices[i]];
        const PPair& hi = pairs[beam.k_indices[i + 1]];
        if (hi.b != 2 * (hi.a - lo.a) + lo.b + 1) {
            report.ok = false;
            report.first_failure = i;
            break;
        }
        ++report.checked;
        report.recurrence_ok_upto = beam.k_indices[i + 1];
    }
    beam.recurrence_ok_upto = report.recurrence_ok_upto;
    return report;
}

// ---------------------------------------------------------------------------
// Beam slope estimates
// ---------------------------------------------------------------------------

struct SlopeEstimate {
    std::optional<double> upper_slope; // absent when the beam family is empty
    double mid_slope = 0.0;
    double tail_fraction = 0.5;
    std::size_t beam_size = 0;
    std::size_t mid_size = 0;
};

namespace detail {

inline double median_tail_ratio(std::span<const PPair> pairs,
                                const std::vector<std::size_t>& family, double tail_fraction) {
    const std::size_t tail_count = std::max<std::size_t>(
        1, static_cast<std::size_t>(static_cast<double>(family.size()) * tail_fraction));
    std::vector<double> ratios;
    ratios.reserve(tail_count);
    for (std::size_t i = family.size() - tail_count; i < family.size(); ++i) {
        const PPair& pr = pairs[family[i]];
        ratios.push_back(static_cast<double>(pr.b) / static_cast<double>(pr.a));
    }
    std::sort(ratios.begin(), ratios.end());
    const std::size_t m = ratios.size() / 2;
    if (ratios.size() % 2 == 1) return ratios[m];
    return (ratios[m - 1] + ratios[m]) / 2.0;
}

} // namespace detail

/**
 * Median tail ratio of the beam family (indices above the q/p threshold)
 * and of the middle family (everything else with n >= 1). The median of
 * the last half is used instead of a line fit: the families approach
 * lines through the origin and the early transient should not leak in.
 *
 * An empty beam means single-beam data and upper_slope is absent; a
 * nonempty family with fewer than 10 members cannot support an estimate.
 */
inline SlopeEstimate estimate_slopes(std::span<const PPair> pairs, const UpperBeam& beam,
                                     double tail_fraction = 0.5) {
    if (pairs.size() < 100)
        throw InsufficientDataError("slope estimation needs at least 100 pairs, got " +
                                    std::to_string(pairs.size()));
    if (tail_fraction <= 0.0 || tail_fraction > 1.0)
        throw ValidationError("tail fraction must be in (0, 1]");

    std::vector<std::size_t> mid;
    mid.reserve(pairs.size());
    {
        std::size_t bi = 0;
        for (std::size_t n = 1; n < pairs.size(); ++n) {
            if (bi < beam.k_indices.size() && beam.k_indices[bi] == n) {
                ++bi;
            } else {
                mid.push_back(n);
            }
        }
    }

    SlopeEstimate est;
    est.tail_fraction = tail_fraction;
    est.beam_size = beam.k_indices.size();
    est.mid_size = mid.size();
    if (mid.size() < 10)
        throw InsufficientDataError("middle family has " + std::to_string(mid.size()) +
                                    " members; need at least 10");
    est.mid_slope = detail::median_tail_ratio(pairs, mid, tail_fraction);
    if (!beam.k_indices.empty()) {
        if (beam.k_indices.size() < 10)
            throw InsufficientDataError("beam family has " +
                                        std::to_string(beam.k_indices.size()) +
                                        " members; need at least 10");
        est.upper_slope = detail::median_tail_ratio(pairs, beam.k_indices, tail_fraction);
    }
    return est;
}

// ---------------------------------------------------------------------------
// Density-split evidence
// ---------------------------------------------------------------------------

struct SideDensitySample {
    u64 n = 0;
    u64 count_below = 0; // side members with a_i < N, ratio below alpha
    u64 count_above = 0; // side members with a_i < N, ratio above alpha+epsilon

    double density_below() const {
        return static_cast<double>(count_below) / static_cast<double>(n);
    }
    double density_above() const {
        return static_cast<double>(count_above) / static_cast<double>(n);
    }
};

/**
 * Split census combined with sampled per-side densities. Evidence only: a
 * finite prefix cannot witness an asymptotic split, so the report carries
 * the raw counts and a flag saying whether both sides stayed populated at
 * every sample point.
 */
struct DensitySplitReport {
    SectorCensus census;
    std::vector<SideDensitySample> samples;
    bool both_sides_positive = false;
};

inline DensitySplitReport density_split_report(std::span<const PPair> pairs,
                                               const Rational& alpha, const Rational& epsilon,
                                               std::size_t sample_count = 10) {
    DensitySplitReport report;
    report.census = sector_census(pairs, alpha, epsilon);
    if (sample_count == 0) throw ValidationError("sample count must be positive");

    const Rational upper = alpha + epsilon;
    std::vector<u64> below_a, above_a;
    for (std::size_t n = 1; n < pairs.size(); ++n) {
        if (compare_ratio(pairs[n].b, pairs[n].a, alpha) < 0)
            below_a.push_back(pairs[n].a);
        else if (compare_ratio(pairs[n].b, pairs[n].a, upper) > 0)
            above_a.push_back(pairs[n].a);
    }
    std::sort(below_a.begin(), below_a.end());
    std::sort(above_a.begin(), above_a.end());

    const u64 a_last = pairs.back().a;
    report.both_sides_positive = true;
    for (std::size_t j = 1; j <= sample_count; ++j) {
        const u64 n = std::max<u64>(1, a_last * j / sample_count);
        SideDensitySample s;
        s.n = n;
        s.count_below =
            static_cast<u64>(std::lower_bound(below_a.begin(), below_a.end(), n) - below_a.begin());
        s.count_above =
            static_cast<u64>(std::lower_bound(above_a.begin(), above_a.end(), n) - above_a.begin());
        if (!report.samples.empty() && report.samples.back().n == n) continue;
        report.samples.push_back(s);
        if (s.count_below == 0 || s.count_above == 0) report.both_sides_positive = false;
    }
    return report;
}

} // namespace gdwn

#endif
