#pragma once

#include "cuspgroup/matrix.hpp"

#include <span>
#include <vector>

namespace cuspgroup {

/// Solution set { particular + span(kernel_basis) } of A x = b.
struct AffineSolution {
    RatVector particular;
    std::vector<RatVector> kernel_basis;
};

/// Gauss-Jordan over Q. Pivot = first nonzero column, smallest row index, so
/// the output is a deterministic function of (A, b). Free variables are set
/// to zero in the particular solution; kernel vectors have a 1 in one free
/// coordinate and 0 in the others.
/// Throws DimensionMismatch or Inconsistent.
AffineSolution solve_affine(const RatMatrix& a, std::span<const Rational> b);

/// Exact inverse. Throws NotSquare or Singular.
RatMatrix invert_matrix(const RatMatrix& a);

} // namespace cuspgroup
