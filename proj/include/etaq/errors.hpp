#pragma once

#include <stdexcept>
#include <string>

namespace etaq {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// series arithmetic
struct ZeroSeriesError : Error {
    using Error::Error;
};
struct LeadingCoefficientNotUnitError : Error {
    using Error::Error;
};
struct InsufficientOrderError : Error {
    using Error::Error;
};
struct NegativeValuationError : Error {
    using Error::Error;
};
struct ResidueOutOfRangeError : Error {
    using Error::Error;
};

// catalog / DSL
struct UnknownSeriesError : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line = 0;
    int col = 0;
    ParseError(std::string msg, int line_, int col_)
        : Error("line " + std::to_string(line_) + ":" + std::to_string(col_) +
                ": " + std::move(msg)),
          line(line_), col(col_) {}
};
struct UnknownNameError : ParseError {
    using ParseError::ParseError;
};
struct ArityError : ParseError {
    using ParseError::ParseError;
};

} // namespace etaq
