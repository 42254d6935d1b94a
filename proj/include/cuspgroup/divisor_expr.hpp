#pragma once

#include "cuspgroup/modular_units.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace cuspgroup {

enum class CuspKind { P, Q };

struct DivisorTerm {
    Integer coefficient;
    CuspKind cusp = CuspKind::P;
    std::size_t index = 0;
    friend bool operator==(const DivisorTerm&, const DivisorTerm&) = default;
};

/// Terms in canonical order (P before Q, ascending index), like terms
/// collected, no zero coefficients.
struct DivisorExpr {
    std::vector<DivisorTerm> terms;
    friend bool operator==(const DivisorExpr&, const DivisorExpr&) = default;
};

/// EXPR := ["+"|"-"] term (("+"|"-") term)*,  term := [INT "*"] ("P"|"Q") INT.
/// Whitespace is ignored; "0" is the empty divisor.
/// Throws ParseError (message carries the offset) or IndexOutOfRange when an
/// index is >= n.
DivisorExpr parse_divisor(std::string_view text, std::size_t n);

/// Inverse of parse_divisor, e.g. "-5*P0 + 3*P1 + 2*Q4"; "0" when empty.
std::string format_divisor(const DivisorExpr& expr);

CuspDivisor to_cusp_divisor(const DivisorExpr& expr, std::size_t n);

/// Throws NonIntegerEntry for a non-integral divisor.
DivisorExpr to_expr(const CuspDivisor& d);

} // namespace cuspgroup
