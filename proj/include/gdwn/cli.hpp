#ifndef GDWN_CLI_HPP
#define GDWN_CLI_HPP

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gdwn/csv.hpp"
#include "gdwn/report.hpp"
#include "gdwn/svg.hpp"

namespace gdwn::cli {

namespace detail {

/// Writes through `fn` to `path`, with "-" meaning the primary out stream.
inline void write_output(const std::string& path, std::ostream& out,
                         const std::function<void(std::ostream&)>& fn) {
    if (path.empty() || path == "-") {
        fn(out);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw ValidationError("cannot open output file '" + path + "'");
    fn(file);
}

inline std::vector<u64> parse_u64_list(const std::string& text) {
    std::vector<u64> values;
    std::string cur;
    std::stringstream ss(text);
    while (std::getline(ss, cur, ',')) {
        if (cur.empty()) throw ValidationError("empty element in list '" + text + "'");
        for (char c : cur)
            if (c < '0' || c > '9')
                throw ValidationError("bad integer '" + cur + "' in list '" + text + "'");
        values.push_back(std::stoull(cur));
    }
    if (values.empty()) throw ValidationError("empty list '" + text + "'");
    return values;
}

inline void print_envelope(std::ostream& out, const Json& envelope) {
    out << envelope.dump(2) << '\n';
}

} // namespace detail

/**
 * Command-line entry point. Returns 0 on success, 1 on validation or
 * usage errors, 2 on analysis failures (a check that ran and came back
 * negative), 3 on resource limits.
 */
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               std::istream& in) {
    CLI::App app{"Exact solver and analysis toolkit for two-pile take-away games"};
    app.set_config("--config");
    app.require_subcommand(1);

    // --- solve ---------------------------------------------------------
    std::string solve_game;
    u64 solve_max_a = 0;
    std::string solve_out = "-";
    auto* solve = app.add_subcommand("solve", "Compute the upper P-positions as CSV");
    solve->add_option("--game", solve_game, "Ruleset: nim, wythoff, or gdwn:p,q")->required();
    solve->add_option("--max-a", solve_max_a, "Largest a-coordinate to emit")->required();
    solve->add_option("--out", solve_out, "Output path, or - for stdout");

    // --- grid ----------------------------------------------------------
    std::string grid_game;
    u64 grid_max_x = 0, grid_max_y = 0, grid_budget = kDefaultCellBudget;
    std::string grid_format = "matrix";
    std::string grid_out = "-";
    auto* grid = app.add_subcommand("grid", "Brute-force P/N classification of a rectangle");
    grid->add_option("--game", grid_game, "Ruleset")->required();
    grid->add_option("--max-x", grid_max_x, "Largest x coordinate")->required();
    grid->add_option("--max-y", grid_max_y, "Largest y coordinate")->required();
    grid->add_option("--budget", grid_budget, "Cell budget");
    grid->add_option("--format", grid_format, "matrix or csv")
        ->check(CLI::IsMember({"matrix", "csv"}));
    grid->add_option("--out", grid_out, "Output path, or - for stdout");

    // --- check ---------------------------------------------------------
    std::string check_game;
    u64 check_bound = 0, check_budget = kDefaultCellBudget;
    auto* check = app.add_subcommand("check", "Cross-validate the solvers on a bounded window");
    check->add_option("--game", check_game, "Ruleset")->required();
    check->add_option("--bound", check_bound, "Largest a-coordinate compared")->required();
    check->add_option("--budget", check_budget, "Cell budget for the brute-force grid");

    // --- propw ---------------------------------------------------------
    std::string propw_in;
    bool propw_sums = false;
    auto* propw = app.add_subcommand("propw", "Check the extension property on a pair CSV");
    propw->add_option("--in", propw_in, "Input CSV path, or - for stdin")->required();
    propw->add_flag("--partial-sums", propw_sums,
                    "Also compare prefix sums against the Beatty sequences");

    // --- density -------------------------------------------------------
    std::string density_game;
    u64 density_max_a = 0, density_samples = 10;
    auto* density = app.add_subcommand("density", "Sampled x-coordinate density of P-positions");
    density->add_option("--game", density_game, "Ruleset")->required();
    density->add_option("--max-a", density_max_a, "Largest a-coordinate solved")->required();
    density->add_option("--samples", density_samples, "Number of evenly spaced sample points");

    // --- ordering ------------------------------------------------------
    std::string ordering_set;
    u64 ordering_horizon = 0;
    bool ordering_positive = false;
    auto* ordering =
        app.add_subcommand("ordering", "Distinct-difference ordering of a set's complement");
    ordering->add_option("--set", ordering_set, "Comma-separated increasing positive integers")
        ->required();
    ordering->add_option("--horizon", ordering_horizon, "Complement taken within {1..horizon}")
        ->required();
    ordering->add_flag("--require-positive-differences", ordering_positive,
                       "Require every difference t(s) - s to be positive");

    // --- split ---------------------------------------------------------
    std::string split_game, split_alpha, split_epsilon;
    u64 split_max_a = 0;
    bool split_json = false, split_csv = false, split_density = false;
    auto* split = app.add_subcommand("split", "Census of ratios against a sector [alpha, alpha+eps]");
    split->add_option("--game", split_game, "Ruleset")->required();
    split->add_option("--max-a", split_max_a, "Largest a-coordinate solved")->required();
    split->add_option("--alpha", split_alpha, "Sector lower edge (exact rational)")->required();
    split->add_option("--epsilon", split_epsilon, "Sector width (exact rational)")->required();
    split->add_flag("--json", split_json, "Emit the JSON report (default)");
    split->add_flag("--csv", split_csv, "Emit the hit list as CSV");
    split->add_flag("--density-split", split_density, "Add per-side sampled densities");

    // --- slopes --------------------------------------------------------
    std::string slopes_game;
    u64 slopes_max_a = 0;
    double slopes_tail = 0.5;
    auto* slopes = app.add_subcommand("slopes", "Median tail slopes of the P-position beams");
    slopes->add_option("--game", slopes_game, "Ruleset")->required();
    slopes->add_option("--max-a", slopes_max_a, "Largest a-coordinate solved")->required();
    slopes->add_option("--tail-fraction", slopes_tail, "Fraction of each family used");

    // --- recurrence ----------------------------------------------------
    u64 recurrence_max_a = 0;
    auto* recurrence =
        app.add_subcommand("recurrence", "Verify the upper-beam step relation for gdwn:1,2");
    recurrence->add_option("--max-a", recurrence_max_a, "Largest a-coordinate solved")->required();

    // --- wythoff-table --------------------------------------------------
    u64 table_max_n = 0;
    std::string table_out = "-";
    auto* table = app.add_subcommand("wythoff-table", "Beatty pair table (n, A, B, Delta) as CSV");
    table->add_option("--max-n", table_max_n, "Largest index")->required();
    table->add_option("--out", table_out, "Output path, or - for stdout");

    // --- plot ----------------------------------------------------------
    std::string plot_game;
    u64 plot_max_a = 0;
    std::string plot_out = "-";
    SvgOptions plot_opts;
    auto* plot = app.add_subcommand("plot", "SVG scatter of P-positions and reflections");
    plot->add_option("--game", plot_game, "Ruleset")->required();
    plot->add_option("--max-a", plot_max_a, "Largest a-coordinate solved")->required();
    plot->add_option("--out", plot_out, "Output path, or - for stdout");
    plot->add_flag("--guide-diagonal", plot_opts.guide_diagonal, "Draw y = x");
    plot->add_flag("--guide-phi", plot_opts.guide_phi, "Draw y = phi x");
    plot->add_flag("--guide-double", plot_opts.guide_double, "Draw y = 2x");
    plot->add_flag("--guide-upper-beam", plot_opts.guide_upper_beam, "Draw y = 2.247x");
    plot->add_flag("--guide-mid-beam", plot_opts.guide_mid_beam, "Draw y = 1.477x");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*solve) {
            const GameSpec spec = parse_game_spec(solve_game);
            const PSequence seq = fast_p_sequence(spec, solve_max_a);
            detail::write_output(solve_out, out,
                                 [&](std::ostream& o) { write_psequence_csv(o, seq.pairs); });
            return 0;
        }

        if (*grid) {
            const GameSpec spec = parse_game_spec(grid_game);
            const PNGrid g = brute_classify(spec, grid_max_x, grid_max_y, grid_budget);
            detail::write_output(grid_out, out, [&](std::ostream& o) {
                if (grid_format == "csv") {
                    o << "x,y,class\n";
                    for (Coord x = 0; x <= g.max_x(); ++x)
                        for (Coord y = 0; y <= g.max_y(); ++y)
                            o << x << ',' << y << ',' << (g.is_p(x, y) ? 'P' : 'N') << '\n';
                } else {
                    for (Coord row = 0; row <= g.max_y(); ++row) {
                        const Coord y = g.max_y() - row;
                        for (Coord x = 0; x <= g.max_x(); ++x)
                            o << (g.is_p(x, y) ? 'P' : '.');
                        o << '\n';
                    }
                }
            });
            return 0;
        }

        if (*check) {
            const GameSpec spec = parse_game_spec(check_game);
            const EquivalenceReport report = verify_equivalence(spec, check_bound, check_budget);
            detail::print_envelope(
                out, make_envelope("check",
                                   Json{{"game", to_string(spec)}, {"bound", check_bound}},
                                   to_json(report)));
            return report.ok ? 0 : 2;
        }

        if (*propw) {
            PairList pairs;
            if (propw_in == "-") {
                pairs = read_psequence_csv(in);
            } else {
                std::ifstream file(propw_in);
                if (!file) throw ValidationError("cannot open input file '" + propw_in + "'");
                pairs = read_psequence_csv(file);
            }
            const PropertyWReport report = check_property_w(pairs);
            Json result = to_json(report);
            bool ok = report.ok;
            if (propw_sums && report.ok) {
                const PartialSumReport sums = partial_sum_compare(pairs);
                ok = ok && sums.ok;
                result["ok"] = ok;
                result["details"]["partial_sums"] = to_json(sums);
            }
            detail::print_envelope(
                out, make_envelope("propw",
                                   Json{{"in", propw_in}, {"pairs", pairs.size()}}, result));
            return ok ? 0 : 2;
        }

        if (*density) {
            const GameSpec spec = parse_game_spec(density_game);
            if (density_samples == 0) throw ValidationError("--samples must be positive");
            const PSequence seq = fast_p_sequence(spec, density_max_a);
            std::vector<u64> sample_points;
            for (u64 j = 1; j <= density_samples; ++j) {
                const u64 n = std::max<u64>(1, density_max_a * j / density_samples);
                if (sample_points.empty() || sample_points.back() != n) sample_points.push_back(n);
            }
            const DensityProfile profile = density_profile(seq.pairs, sample_points);
            detail::print_envelope(
                out, make_envelope("density",
                                   Json{{"game", to_string(spec)},
                                        {"max_a", density_max_a},
                                        {"samples", density_samples}},
                                   to_json(profile)));
            return 0;
        }

        if (*ordering) {
            const std::vector<u64> set = detail::parse_u64_list(ordering_set);
            const OrderingResult result =
                distinct_difference_ordering_exists(set, ordering_horizon, ordering_positive);
            detail::print_envelope(
                out, make_envelope("ordering",
                                   Json{{"set", ordering_set},
                                        {"horizon", ordering_horizon},
                                        {"require_positive_differences", ordering_positive}},
                                   to_json(result, set, ordering_horizon, ordering_positive)));
            return 0;
        }

        if (*split) {
            if (split_json && split_csv)
                throw ValidationError("--json and --csv are mutually exclusive");
            const GameSpec spec = parse_game_spec(split_game);
            const Rational alpha = parse_rational(split_alpha);
            const Rational epsilon = parse_rational(split_epsilon);
            const PSequence seq = fast_p_sequence(spec, split_max_a);
            const Json params{{"game", to_string(spec)},
                              {"max_a", split_max_a},
                              {"alpha", split_alpha},
                              {"epsilon", split_epsilon}};
            if (split_csv) {
                const SectorCensus census = sector_census(seq.pairs, alpha, epsilon);
                out << "n,a,b,delta,ratio\n";
                for (std::size_t n : census.hits)
                    out << n << ',' << seq.pairs[n].a << ',' << seq.pairs[n].b << ','
                        << seq.pairs[n].delta() << ','
                        << format_ratio(seq.pairs[n].b, seq.pairs[n].a) << '\n';
                return 0;
            }
            if (split_density) {
                const DensitySplitReport report = density_split_report(seq.pairs, alpha, epsilon);
                detail::print_envelope(out,
                                       make_envelope("split", params, to_json(report, seq.pairs)));
                return 0;
            }
            const SectorCensus census = sector_census(seq.pairs, alpha, epsilon);
            detail::print_envelope(out,
                                   make_envelope("split", params, to_json(census, seq.pairs)));
            return 0;
        }

        if (*slopes) {
            const GameSpec spec = parse_game_spec(slopes_game);
            const PSequence seq = fast_p_sequence(spec, slopes_max_a);
            const Coord tp = spec.kind == GameKind::gdwn ? spec.p : 1;
            const Coord tq = spec.kind == GameKind::gdwn ? spec.q : 2;
            const UpperBeam beam = upper_indices(seq.pairs, tp, tq);
            const SlopeEstimate est = estimate_slopes(seq.pairs, beam, slopes_tail);
            detail::print_envelope(
                out, make_envelope("slopes",
                                   Json{{"game", to_string(spec)},
                                        {"max_a", slopes_max_a},
                                        {"tail_fraction", slopes_tail}},
                                   to_json(est)));
            return 0;
        }

        if (*recurrence) {
            const GameSpec spec = GameSpec::gdwn(1, 2);
            const PSequence seq = fast_p_sequence(spec, recurrence_max_a);
            UpperBeam beam = upper_indices(seq.pairs, spec.p, spec.q);
            const RecurrenceReport report = verify_recurrence(seq.pairs, beam);
            detail::print_envelope(
                out, make_envelope("recurrence",
                                   Json{{"game", to_string(spec)}, {"max_a", recurrence_max_a}},
                                   to_json(report, beam)));
            return report.ok ? 0 : 2;
        }

        if (*table) {
            detail::write_output(table_out, out,
                                 [&](std::ostream& o) { write_beatty_table_csv(o, table_max_n); });
            return 0;
        }

        if (*plot) {
            const GameSpec spec = parse_game_spec(plot_game);
            const PSequence seq = fast_p_sequence(spec, plot_max_a);
            detail::write_output(plot_out, out, [&](std::ostream& o) {
                export_svg_scatter(o, seq.pairs, plot_opts);
            });
            return 0;
        }
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const RangeError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const InsufficientDataError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::bad_alloc&) {
        err << "error: out of memory\n";
        return 3;
    } catch (const std::length_error&) {
        err << "error: requested size beyond addressable range\n";
        return 3;
    }
    return 0;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    return run(args, out, err, std::cin);
}

} // namespace gdwn::cli

#endif
