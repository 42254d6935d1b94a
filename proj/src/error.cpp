#include "cuspgroup/error.hpp"

#include <sstream>

namespace cuspgroup {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::NotPrimitiveRoot: return "NotPrimitiveRoot";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonIntegerEntry: return "NonIntegerEntry";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::EmptyVector: return "EmptyVector";
    case ErrorKind::NonIntegerExponent: return "NonIntegerExponent";
    case ErrorKind::WrongLattice: return "WrongLattice";
    case ErrorKind::NotDegreeZero: return "NotDegreeZero";
    case ErrorKind::IntegralityViolation: return "IntegralityViolation";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::Usage: return "Usage";
    }
    return "Unknown";
}

void invariant_failed(const char* expr, const char* file, int line, const std::string& msg)
{
    std::ostringstream os;
    os << "invariant violated: " << expr << " at " << file << ":" << line;
    if (!msg.empty())
        os << " (" << msg << ")";
    throw InvariantError(os.str());
}

} // namespace cuspgroup
