#pragma once

#include "cuspgroup/arith.hpp"

#include <cstdint>
#include <vector>

namespace cuspgroup {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Inverse of a modulo m; a must be a unit.
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

// Distinct prime factors by trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

bool is_primitive_root(std::uint64_t g, std::uint64_t p);

/// Smallest g >= 2 generating (Z/pZ)^*. Throws NotPrime / TooSmall.
std::uint64_t find_primitive_root(std::uint64_t p);

/// B2({x}) = y^2 - y + 1/6 with y the fractional part of x.
Rational bernoulli2_frac(const Rational& x);

} // namespace cuspgroup
