#pragma once

#include <stdexcept>
#include <string>

namespace fmk {

// Base class for everything thrown on purpose by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: bad JSON, bad rational literal, wrong matrix shape, ...
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

// A precondition of an operation was violated (genus mismatch, non-integral
// matrix where an integral one is required, invalid slot index, ...).
struct PreconditionError : Error {
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

// An internal mathematical operation cannot proceed (singular matrix,
// non-invertible unit, class that does not have the requested shape).
struct MathError : Error {
    explicit MathError(const std::string& what) : Error(what) {}
};

} // namespace fmk
