#pragma once

// Reference computations used only by the tests. Each one takes a different
// route from the library: brute force, textbook formulas, or plain Gaussian
// elimination over Q.

#include "cuspgroup/arith.hpp"
#include "cuspgroup/matrix.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace cuspgroup::oracle {

// Multiplicative order of g mod p by repeated multiplication.
std::uint64_t multiplicative_order(std::uint64_t g, std::uint64_t p);

// Trial division.
bool is_prime_naive(std::uint64_t n);

// (p/2) B2({alpha^i / p}) with alpha^i mod p by repeated multiplication.
std::vector<Rational> bernoulli_vector(std::uint64_t p, std::uint64_t alpha);

// Determinant by textbook Gaussian elimination over Q.
Rational det_gauss(const RatMatrix& a);

// Solves a x = b for square nonsingular a by Gaussian elimination over Q.
std::vector<Rational> solve_gauss(const RatMatrix& a, const std::vector<Rational>& b);

// Invariant factors (> 1 only) from gcds of k x k minors; tiny matrices only.
std::vector<Integer> invariant_factors_by_minors(const IntMatrix& a);

// Order of the class of x in Z^m / a Z^m: lcm of denominators of a^{-1} x.
Integer cokernel_element_order(const IntMatrix& a, const std::vector<Integer>& x);

// ord at P_i and Q_i of prod E_j^{e_j} F_j^{f_j} with exponent index j and
// cusp index i kept unreduced: B2({alpha^{i+j}/p}) evaluated directly.
struct RawDivisor {
    std::vector<Rational> p, q;
};
RawDivisor divisor_unreduced(std::uint64_t p, std::uint64_t alpha, const std::vector<Rational>& e,
                             const std::vector<Rational>& f);

} // namespace cuspgroup::oracle
