#pragma once

#include <stdexcept>
#include <string>

namespace lfzero {

// Invalid mathematical input: u outside (0,1), empty gamma factors,
// nonpositive scale, pole of a special function, ...
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A requested range is not covered by the supplied zero table, or the
// transform mass beyond the covered range exceeds its documented bound.
struct CoverageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Adaptive quadrature stopped at max_subdivisions without meeting the
// requested tolerance; `achieved` is the error estimate it got to.
struct QuadratureError : std::runtime_error {
    QuadratureError(const std::string& what, double requested_, double achieved_)
        : std::runtime_error(what), requested(requested_), achieved(achieved_) {}
    double requested;
    double achieved;
};

// Input file rejected.  `line` is 1-based; 0 means the file as a whole.
struct ParseError : std::runtime_error {
    ParseError(const std::string& path, long line_, const std::string& reason)
        : std::runtime_error(path + ":" + std::to_string(line_) + ": " + reason),
          line(line_) {}
    long line;
};

// Cancellation in an extended-precision accumulation exceeded the
// working-digits budget.
struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A test function failed its admissibility grid checks.
struct ConditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace lfzero
