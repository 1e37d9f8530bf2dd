#pragma once

#include <stdexcept>
#include <string>

namespace bfa {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input text could not be parsed. `column` is 1-based.
struct ParseError : Error {
    std::size_t column;
    ParseError(const std::string& msg, std::size_t col)
        : Error(msg + " (column " + std::to_string(col) + ")"), column(col) {}
};

// An operation was invoked above its documented size cap.
struct CapExceeded : Error {
    using Error::Error;
};

// A search configuration that cannot be executed as requested.
struct InfeasibleConfig : Error {
    using Error::Error;
};

}  // namespace bfa
