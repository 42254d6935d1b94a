#pragma once

#include "cuspgroup/curve_context.hpp"
#include "cuspgroup/error.hpp"

#include <vector>

namespace cuspgroup {

/// Exponents of prod E_i^{e_i} F_j^{f_j}. Rational so that intermediate
/// solutions can be carried before scaling to an actual unit.
struct UnitExponents {
    RatVector e;
    RatVector f;

    static UnitExponents zero(std::size_t n) { return {RatVector(n, Rational(0)), RatVector(n, Rational(0))}; }
    bool is_integral() const { return all_integral(e) && all_integral(f); }
    friend bool operator==(const UnitExponents&, const UnitExponents&) = default;
};

/// Coefficients over the cusps P_0..P_{n-1} and Q_0..Q_{n-1}.
struct CuspDivisor {
    RatVector p;
    RatVector q;

    static CuspDivisor zero(std::size_t n) { return {RatVector(n, Rational(0)), RatVector(n, Rational(0))}; }
    Rational degree() const;
    bool is_integral() const { return all_integral(p) && all_integral(q); }
    bool is_zero() const;
    CuspDivisor scaled(const Rational& k) const;
    CuspDivisor operator+(const CuspDivisor& other) const;
    CuspDivisor operator-(const CuspDivisor& other) const;
    friend bool operator==(const CuspDivisor&, const CuspDivisor&) = default;
};

/// How exponents built from powers of alpha are represented.
///   Reduced: alpha^{2i+2} taken in [0, p^2), gamma = alpha^{p-2} in [0, p).
///   Literal: the exact integer powers.
/// Both give the same unit lattice up to a unimodular change of basis.
enum class ExponentPolicy { Reduced, Literal };

/// Congruence criterion for a unit on Gamma_1(p). Throws NonIntegerExponent.
bool check_unit(const CurveContext& ctx, const UnitExponents& u);

/// True iff u is a unit whose divisor is supported on the P cusps.
bool check_infty_unit(const CurveContext& ctx, const UnitExponents& u);

CuspDivisor divisor_of(const CurveContext& ctx, const UnitExponents& u);

/// G_0..G_{n-1}, H_1..H_{n-1}: p - 2 units.
std::vector<UnitExponents> basis_full(const CurveContext& ctx, ExponentPolicy policy = ExponentPolicy::Reduced);

/// The full basis with H_replaced (1 <= replaced <= n - 2) swapped for H_0.
std::vector<UnitExponents> basis_full_with_h0(const CurveContext& ctx, std::size_t replaced,
                                              ExponentPolicy policy = ExponentPolicy::Reduced);

/// I_1..I_{n-1}: units with divisor supported on the P cusps.
std::vector<UnitExponents> basis_infty(const CurveContext& ctx, ExponentPolicy policy = ExponentPolicy::Reduced);

/// Unit with divisor (sum of P terms) + (Q_0 + ... + Q_{n-1}).
UnitExponents make_In(const CurveContext& ctx);

/// basis_infty followed by make_In.
std::vector<UnitExponents> basis_rational(const CurveContext& ctx, ExponentPolicy policy = ExponentPolicy::Reduced);

/// div(prod_{i<n-1} G_i H_i) = c2 div(G_{n-1}) + c3 div(H_{n-1}).
struct H0Relation {
    Integer c2;
    Integer c3;
};

/// Throws IntegralityViolation if the exponent bookkeeping is not integral.
H0Relation h0_relation(const CurveContext& ctx, ExponentPolicy policy = ExponentPolicy::Reduced);

} // namespace cuspgroup
