// errors.hpp - exception types shared by all components
#pragma once

#include <stdexcept>
#include <string>

namespace pucci {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad key notation, malformed stream token, malformed rule line.
struct ParseError : Error {
    using Error::Error;
};

// Malformed or inconsistent data file (reports the line number).
struct LoadError : Error {
    using Error::Error;
};

// Missing dictionary entry or fixture id.
struct LookupError : Error {
    using Error::Error;
};

// Realization table has no cell for a (key, context) pair.
struct CoverageError : Error {
    using Error::Error;
};

// Source token that cannot be analyzed or realized.
struct EncodeError : Error {
    using Error::Error;
};

} // namespace pucci
