#ifndef GDWN_SVG_HPP
#define GDWN_SVG_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <span>
#include <string>

#include "gdwn/sequence.hpp"
#include "gdwn/wythoff.hpp"

namespace gdwn {

struct SvgOptions {
    bool guide_diagonal = false;  // y = x
    bool guide_phi = false;       // y = phi * x
    bool guide_double = false;    // y = 2x
    bool guide_upper_beam = false; // y = 2.247x
    bool guide_mid_beam = false;   // y = 1.477x
};

namespace detail {

inline std::string fmt3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

} // namespace detail

/**
 * Self-contained scatter plot of the P-positions and their reflections,
 * axes scaled to the data bounding box. Point radius shrinks with the
 * point count so dense plots stay readable. Output is byte-identical for
 * identical input and options.
 */
inline void export_svg_scatter(std::ostream& out, std::span<const PPair> pairs,
                               const SvgOptions& opts) {
    if (pairs.empty()) throw ValidationError("cannot plot an empty pair list");

    Coord max_coord = 1;
    std::size_t points = 0;
    for (const PPair& pr : pairs) {
        max_coord = std::max({max_coord, pr.a, pr.b});
        points += pr.a == pr.b ? 1 : 2;
    }
    const double margin = 20.0;
    const double side = 800.0;
    const double scale = side / static_cast<double>(max_coord);
    const double radius =
        std::max(0.5, 40.0 / std::sqrt(static_cast<double>(points)));

    const auto px = [&](Coord x) { return margin + static_cast<double>(x) * scale; };
    const auto py = [&](Coord y) { return margin + side - static_cast<double>(y) * scale; };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"840\" height=\"840\" "
           "viewBox=\"0 0 840 840\">\n";
    out << "<rect width=\"840\" height=\"840\" fill=\"white\"/>\n";

    const auto guide = [&](double slope, const char* color) {
        // clip the ray y = slope*x to the data box
        const double x_end = slope >= 1.0 ? static_cast<double>(max_coord) / slope
                                          : static_cast<double>(max_coord);
        const double y_end = slope >= 1.0 ? static_cast<double>(max_coord) : x_end * slope;
        out << "<line x1=\"" << detail::fmt3(px(0)) << "\" y1=\"" << detail::fmt3(py(0))
            << "\" x2=\"" << detail::fmt3(margin + x_end * scale) << "\" y2=\""
            << detail::fmt3(margin + side - y_end * scale) << "\" stroke=\"" << color
            << "\" stroke-width=\"1\"/>\n";
    };
    if (opts.guide_diagonal) guide(1.0, "#888888");
    if (opts.guide_phi) {
        // slope from the integer closed form; precise far beyond pixel scale
        const double phi = static_cast<double>(beatty_a(1000000000000ULL)) / 1e12;
        guide(phi, "#2a9d8f");
    }
    if (opts.guide_double) guide(2.0, "#888888");
    if (opts.guide_upper_beam) guide(2.247, "#e76f51");
    if (opts.guide_mid_beam) guide(1.477, "#e9c46a");

    out << "<g fill=\"black\">\n";
    const std::string r = detail::fmt3(radius);
    for (const PPair& pr : pairs) {
        out << "<circle cx=\"" << detail::fmt3(px(pr.a)) << "\" cy=\"" << detail::fmt3(py(pr.b))
            << "\" r=\"" << r << "\"/>\n";
        if (pr.a != pr.b)
            out << "<circle cx=\"" << detail::fmt3(px(pr.b)) << "\" cy=\""
                << detail::fmt3(py(pr.a)) << "\" r=\"" << r << "\"/>\n";
    }
    out << "</g>\n</svg>\n";
}

} // namespace gdwn

#endif
