#ifndef GDWN_CSV_HPP
#define GDWN_CSV_HPP

#include <cstdio>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "gdwn/errors.hpp"
#include "gdwn/sequence.hpp"
#include "gdwn/wythoff.hpp"

namespace gdwn {

inline std::string format_ratio(Coord b, Coord a) {
    if (a == 0) return "";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", static_cast<double>(b) / static_cast<double>(a));
    return buf;
}

/**
 * P-sequence CSV: header `n,a,b,delta,ratio`, LF endings, ratio with six
 * decimals and empty at the origin. The format round-trips exactly
 * through read_psequence_csv.
 */
inline void write_psequence_csv(std::ostream& out, std::span<const PPair> pairs) {
    out << "n,a,b,delta,ratio\n";
    for (std::size_t n = 0; n < pairs.size(); ++n) {
        out << n << ',' << pairs[n].a << ',' << pairs[n].b << ',' << pairs[n].delta() << ','
            << format_ratio(pairs[n].b, pairs[n].a) << '\n';
    }
}

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

inline u64 parse_u64_field(const std::string& s, std::size_t line_no, const char* what) {
    if (s.empty())
        throw ValidationError("line " + std::to_string(line_no) + ": empty " + what + " field");
    for (char c : s)
        if (c < '0' || c > '9')
            throw ValidationError("line " + std::to_string(line_no) + ": bad " + what + " '" + s +
                                  "'");
    try {
        return std::stoull(s);
    } catch (const std::exception&) {
        throw ValidationError("line " + std::to_string(line_no) + ": " + what + " out of range");
    }
}

} // namespace detail

/**
 * Reads a P-sequence CSV. The header must start with `n,a,b`; the n column
 * must count up from 0; extra columns (delta, ratio) are ignored.
 */
inline PairList read_psequence_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ValidationError("empty CSV input");
    {
        const auto header = detail::split_csv_line(line);
        if (header.size() < 3 || header[0] != "n" || header[1] != "a" || header[2] != "b")
            throw ValidationError("CSV header must start with n,a,b");
    }
    PairList pairs;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto fields = detail::split_csv_line(line);
        if (fields.size() < 3)
            throw ValidationError("line " + std::to_string(line_no) + ": expected n,a,b,...");
        const u64 n = detail::parse_u64_field(fields[0], line_no, "index");
        if (n != pairs.size())
            throw ValidationError("line " + std::to_string(line_no) + ": index " +
                                  std::to_string(n) + " out of order (expected " +
                                  std::to_string(pairs.size()) + ")");
        const u64 a = detail::parse_u64_field(fields[1], line_no, "a");
        const u64 b = detail::parse_u64_field(fields[2], line_no, "b");
        pairs.push_back({a, b});
    }
    if (pairs.empty()) throw ValidationError("CSV contains no data rows");
    return pairs;
}

/// Beatty table CSV: `n,A,B,Delta` for n in [0, max_n].
inline void write_beatty_table_csv(std::ostream& out, u64 max_n) {
    out << "n,A,B,Delta\n";
    for (u64 n = 0; n <= max_n; ++n) {
        const BeattyPair bp = beatty_pair(n);
        out << n << ',' << bp.a << ',' << bp.b << ',' << bp.delta << '\n';
    }
}

} // namespace gdwn

#endif
