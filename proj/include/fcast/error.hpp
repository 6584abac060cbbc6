#ifndef FCAST_ERROR_HPP
#define FCAST_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fcast {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input files (bad tokens, schema violations); carries a location.
struct ParseError : Error {
    using Error::Error;
    ParseError(const std::string& msg, int line)
        : Error(msg + " (line " + std::to_string(line) + ")"), line_number(line) {}
    int line_number = 0;
};

/// Semantically invalid data: gaps, duplicates, out-of-range fields.
struct DataError : Error {
    using Error::Error;
};

/// Numerically degenerate or infeasible computation.
struct ComputeError : Error {
    using Error::Error;
};

/// Bad CLI / config-file settings.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace fcast

#endif
