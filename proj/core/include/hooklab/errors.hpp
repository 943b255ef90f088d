#pragma once

#include <stdexcept>
#include <string>

namespace hooklab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid exact arithmetic, e.g. division by the zero rational function.
class ArithmeticError : public Error {
public:
    using Error::Error;
};

/// A precondition of a series/expansion operation does not hold.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Substitution made a denominator vanish.
class PoleError : public DomainError {
public:
    PoleError(const std::string& msg, std::string parameter)
        : DomainError(msg), parameter(std::move(parameter)) {}

    std::string parameter;
};

/// Syntax error with the offset into the source text.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg), position(position) {}

    std::size_t position = 0;
};

} // namespace hooklab
