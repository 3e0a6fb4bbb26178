#pragma once

#include <stdexcept>
#include <string>

namespace csurf {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or semantically invalid input: spec files, expressions, numbers.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

// An operation was applied outside its mathematical domain. The message
// names the offending endpoint.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// A quantity cannot be certified at the working precision, or exceeds
// what the numeric format can represent. Distinct from DomainError:
// the input may be mathematically fine but numerically out of reach.
class RepresentationError : public Error {
public:
    explicit RepresentationError(const std::string& what) : Error(what) {}
};

// A geometric construction (hexagon realization, ring normalization)
// failed a certified validity check.
class RealizationError : public Error {
public:
    explicit RealizationError(const std::string& what) : Error(what) {}
};

// Internal invariant violation. Never expected on any input.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& what) : Error(what) {}
};

} // namespace csurf
