#ifndef GDWN_ERRORS_HPP
#define GDWN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gdwn {

/// Bad user input: malformed game spec, negative parameter, CSV syntax, ...
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// A requested value lies outside the computed or computable range.
class RangeError : public std::out_of_range {
public:
    explicit RangeError(const std::string& what) : std::out_of_range(what) {}
};

/// A configured budget (cells, memory, search nodes) would be exceeded.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Not enough data points to produce the requested statistic.
class InsufficientDataError : public std::runtime_error {
public:
    explicit InsufficientDataError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace gdwn

#endif
