#ifndef GDWN_REPORT_HPP
#define GDWN_REPORT_HPP

#include <string>

#include <json.hpp>

#include "gdwn/sequence_analysis.hpp"
#include "gdwn/solver.hpp"
#include "gdwn/split_analysis.hpp"
#include "gdwn/version.hpp"

namespace gdwn {

using Json = nlohmann::ordered_json;

/// Every analysis report shares the shape {check, ok, details}.
inline Json make_report(const std::string& check, bool ok, Json details) {
    return Json{{"check", check}, {"ok", ok}, {"details", std::move(details)}};
}

/// CLI envelope wrapping a report or payload description.
inline Json make_envelope(const std::string& command, Json params, Json result) {
    return Json{{"tool_version", kToolVersion},
                {"command", command},
                {"params", std::move(params)},
                {"result", std::move(result)}};
}

inline Json to_json(const PropertyWReport& r) {
    Json details = Json::object();
    if (r.violation) {
        Json v{{"kind", to_string(r.violation->kind)}, {"index_i", r.violation->index_i}};
        if (r.violation->index_j) v["index_j"] = *r.violation->index_j;
        if (r.violation->value) v["value"] = *r.violation->value;
        details["violation"] = std::move(v);
    }
    return make_report("property_w", r.ok, std::move(details));
}

inline Json to_json(const PartialSumReport& r) {
    Json details{{"prefix_length", r.prefix_length},
                 {"min_margin_a", r.min_margin_a},
                 {"argmin_a", r.argmin_a},
                 {"min_margin_b", r.min_margin_b},
                 {"argmin_b", r.argmin_b}};
    if (r.first_violation) details["first_violation"] = *r.first_violation;
    return make_report("partial_sums", r.ok, std::move(details));
}

inline Json to_json(const DensityProfile& profile) {
    Json samples = Json::array();
    for (const DensitySample& s : profile.samples) {
        samples.push_back(Json{{"N", s.n},
                               {"count_x", s.count_x},
                               {"tau", s.tau()},
                               {"count_y", s.count_y},
                               {"tau_y", s.tau_y()}});
    }
    Json details{{"samples", std::move(samples)}};
    if (profile.min_tau_tail) {
        details["min_tau_tail"] = Json{{"N", profile.min_tau_tail->n},
                                       {"count_x", profile.min_tau_tail->count_x},
                                       {"tau", profile.min_tau_tail->tau()}};
    }
    return make_report("density_profile", true, std::move(details));
}

inline Json to_json(const OrderingResult& r, std::span<const u64> set, u64 horizon,
                    bool require_positive) {
    Json details{{"set", Json::array()},
                 {"horizon", horizon},
                 {"require_positive_differences", require_positive},
                 {"exists", r.exists}};
    for (u64 v : set) details["set"].push_back(v);
    if (r.exists) {
        Json witness = Json::array();
        Json diffs = Json::array();
        for (std::size_t i = 0; i < r.witness.size(); ++i) {
            witness.push_back(r.witness[i]);
            diffs.push_back(static_cast<std::int64_t>(r.witness[i]) -
                            static_cast<std::int64_t>(set[i]));
        }
        details["witness"] = std::move(witness);
        details["differences"] = std::move(diffs);
    }
    return make_report("distinct_difference_ordering", true, std::move(details));
}

inline Json to_json(const EquivalenceReport& r) {
    Json details{{"game", to_string(r.spec)},
                 {"bound", r.bound},
                 {"cells_checked", r.cells_checked}};
    if (r.first_mismatch) {
        details["first_mismatch"] = Json{{"x", r.first_mismatch->pos.x},
                                         {"y", r.first_mismatch->pos.y},
                                         {"detail", r.first_mismatch->detail}};
    }
    return make_report("solver_equivalence", r.ok, std::move(details));
}

inline constexpr std::size_t kMaxInlineHits = 1000;

inline Json to_json(const SectorCensus& census, std::span<const PPair> pairs) {
    Json details{{"alpha", to_string(census.alpha)},
                 {"epsilon", to_string(census.epsilon)},
                 {"total_pairs", census.total_pairs},
                 {"total_below", census.total_below},
                 {"hit_count", census.hits.size()},
                 {"total_above", census.total_above}};
    if (census.last_hit_index) details["last_hit_index"] = *census.last_hit_index;
    if (census.hits.size() <= kMaxInlineHits) {
        Json hits = Json::array();
        for (std::size_t n : census.hits)
            hits.push_back(Json{{"n", n}, {"a", pairs[n].a}, {"b", pairs[n].b}});
        details["hits"] = std::move(hits);
    } else {
        details["first_hit_index"] = census.hits.front();
    }
    return make_report("sector_census", true, std::move(details));
}

inline Json to_json(const RecurrenceReport& r, const UpperBeam& beam) {
    Json details{{"beam_size", beam.k_indices.size()},
                 {"checked", r.checked},
                 {"recurrence_ok_upto", r.recurrence_ok_upto}};
    if (r.first_failure) details["first_failure"] = *r.first_failure;
    return make_report("beam_recurrence", r.ok, std::move(details));
}

inline Json to_json(const SlopeEstimate& e) {
    Json details{{"mid_slope", e.mid_slope},
                 {"tail_fraction", e.tail_fraction},
                 {"beam_size", e.beam_size},
                 {"mid_size", e.mid_size}};
    if (e.upper_slope) details["upper_slope"] = *e.upper_slope;
    return make_report("slope_estimates", true, std::move(details));
}

inline Json to_json(const DensitySplitReport& r, std::span<const PPair> pairs) {
    Json sides = Json::array();
    for (const SideDensitySample& s : r.samples) {
        sides.push_back(Json{{"N", s.n},
                             {"count_below", s.count_below},
                             {"density_below", s.density_below()},
                             {"count_above", s.count_above},
                             {"density_above", s.density_above()}});
    }
    Json census = to_json(r.census, pairs);
    Json details{{"census", census["details"]},
                 {"side_samples", std::move(sides)},
                 {"both_sides_positive", r.both_sides_positive},
                 {"note", "sampled evidence on a finite prefix, not an asymptotic statement"}};
    return make_report("density_split", true, std::move(details));
}

} // namespace gdwn

#endif
