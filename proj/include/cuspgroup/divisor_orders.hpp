#pragma once

#include "cuspgroup/modular_units.hpp"

#include <optional>

namespace cuspgroup {

/// b with circ(a)^{-1} = circ(b_0, b_{n-1}, ..., b_1).
struct BVector {
    RatVector b;
};

/// Throws Singular (not expected for a valid context).
BVector b_values(const CurveContext& ctx);

/// Congruence data behind an order computed from the P/Q system.
struct CongruenceData {
    Integer d1, d2, d3;
    Integer n1, n2, n3;
};

/// Order N of a class with a unit whose divisor is N times the class.
struct OrderCertificate {
    Integer order;
    UnitExponents solution;          // rational preimage x of the divisor
    UnitExponents witness;           // order * solution
    Integer denominator_lcm;         // L
    std::optional<Integer> t_value;  // P-supported route
    std::optional<CongruenceData> congruences;
};

/// [P_0 - P_{n-1}] from c = circ(a)^{-1} (1, 0, ..., 0, -1).
OrderCertificate order_of_Dprime(const CurveContext& ctx);

/// [P_0 - Q_0] from the block system normalized by f_0 = 0.
OrderCertificate order_of_D(const CurveContext& ctx);

/// Any integral degree-0 divisor. Throws NotDegreeZero or NonIntegerEntry.
OrderCertificate order_closed_form_generic(const CurveContext& ctx, const CuspDivisor& d);

/// Preimage of P_0 - Q_0 with f_0 = 0 written through b:
///   e_i = 12/n^2 + b_0 + b_{-i},  f_i = b_0 - b_{-i}  (indices mod n).
UnitExponents spectral_solution_D(const CurveContext& ctx, const BVector& b);

/// Preimage of P_0 - P_{n-1} through b: c_i = b_{-i} - b_{1-i}.
RatVector spectral_solution_Dprime(const CurveContext& ctx, const BVector& b);

/// The divisors P_0 - Q_0 and P_0 - P_{n-1}.
CuspDivisor divisor_D(const CurveContext& ctx);
CuspDivisor divisor_Dprime(const CurveContext& ctx);

} // namespace cuspgroup
