#ifndef IFD_ERRORS_HPP
#define IFD_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ifd {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Lexing/parsing failure; position is a character index into the input.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& message)
        : Error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Argument outside an operation's stated domain (bad probability,
// invalid distribution parameter, malformed bracket, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Root finding: the function values at the bracket ends do not straddle
// the target.
class NoBracket : public Error {
public:
    using Error::Error;
};

// Root finding: tolerance not reached within the iteration budget.
class MaxIterations : public Error {
public:
    using Error::Error;
};

// Quadrature: recursion limit hit; the integrand has a non-integrable
// spike or the interval is wrong.
class MaxDepth : public Error {
public:
    using Error::Error;
};

// Monotonicity certification failed; witness() is a grid node where the
// derivative changes sign or vanishes.
class NotMonotone : public Error {
public:
    NotMonotone(double witness, const std::string& message)
        : Error(message), witness_(witness) {}

    double witness() const { return witness_; }

private:
    double witness_;
};

// f or f' evaluated to NaN/inf on the verification grid.
class NonFinite : public Error {
public:
    NonFinite(double witness, const std::string& message)
        : Error(message), witness_(witness) {}

    double witness() const { return witness_; }

private:
    double witness_;
};

// The image of the working domain under f misses (enough of) the source
// distribution's support.
class SupportMismatch : public Error {
public:
    using Error::Error;
};

// An operation that needs at least one element got none.
class EmptyInput : public Error {
public:
    using Error::Error;
};

} // namespace ifd

#endif
