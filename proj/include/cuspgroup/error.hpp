#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cuspgroup {

enum class ErrorKind {
    NotPrime,
    TooSmall,
    NotPrimitiveRoot,
    NotSquare,
    DimensionMismatch,
    NonIntegerEntry,
    Inconsistent,
    Singular,
    EmptyVector,
    NonIntegerExponent,
    WrongLattice,
    NotDegreeZero,
    IntegralityViolation,
    ParseError,
    IndexOutOfRange,
    Usage,
};

std::string_view to_string(ErrorKind kind);

// Domain errors: bad input to a mathematical operation.
class MathError : public std::runtime_error {
public:
    MathError(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Raised when a postcondition that must hold by construction fails.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

[[noreturn]] void invariant_failed(const char* expr, const char* file, int line, const std::string& msg);

} // namespace cuspgroup

#define CUSPGROUP_ENSURE(cond, msg)                                                   \
    do {                                                                              \
        if (!(cond))                                                                  \
            ::cuspgroup::invariant_failed(#cond, __FILE__, __LINE__, (msg));          \
    } while (0)
