#pragma once

#include "cuspgroup/kernels/mod_axpy.hpp"
#include "cuspgroup/matrix.hpp"

#include <cstdint>
#include <vector>

namespace cuspgroup {

/// Fraction-free (Bareiss) determinant of a square integer matrix.
Integer det_bareiss(const IntMatrix& a);

/// Exact determinant over Q. Each row is scaled to integers by the lcm of its
/// denominators, Bareiss runs on the result, and the scale is divided out.
/// Throws NotSquare.
Rational det_exact(const RatMatrix& a);

/// Determinant of an n x n matrix over Z/qZ (q prime, q < 2^26). `entries` is
/// row-major, residues in [0, q), and is destroyed.
std::uint32_t det_mod_prime(std::vector<double>& entries, std::size_t n, std::uint32_t q, kernels::SubmulFn submul);

/// Upper bound on log2 |det a| from Hadamard's inequality (rows or columns,
/// whichever is tighter).
std::size_t hadamard_bound_bits(const IntMatrix& a);

/// Exact determinant by Chinese remaindering over enough word-size primes to
/// exceed twice the Hadamard bound. Deterministic.
Integer det_multimodular(const IntMatrix& a, kernels::Isa isa = kernels::best_isa());

/// Bareiss for small dimension, multimodular beyond it.
Integer det_integer(const IntMatrix& a);

} // namespace cuspgroup
