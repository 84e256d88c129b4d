#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polar {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) +
                ": " + what),
          line(line),
          column(column) {}
    std::size_t line;
    std::size_t column;
};

struct ArityConflictError : Error {
    using Error::Error;
};

struct UnsafeRuleError : Error {
    using Error::Error;
};

struct NotPolarError : Error {
    using Error::Error;
};

struct UnstratifiedError : Error {
    using Error::Error;
};

struct ResourceLimitError : Error {
    using Error::Error;
};

struct NotFlattenableError : Error {
    using Error::Error;
};

struct NotStretchableError : Error {
    using Error::Error;
};

struct InputError : Error {
    using Error::Error;
};

}  // namespace polar
