#pragma once

#include "cuspgroup/matrix.hpp"

#include <optional>
#include <span>
#include <vector>

namespace cuspgroup {

/// A = U * S * V with U, V unimodular and S diagonal, d_1 | d_2 | ... | d_r
/// positive, followed by zeros.
struct SnfResult {
    IntMatrix U;
    IntMatrix S;
    IntMatrix V;
    /// The positive diagonal entries of S, 1s included, zeros excluded.
    IntVector invariant_factors;
};

/// Smith normal form with exact unimodular transforms. Pivot = smallest
/// absolute value in the active block. Intended for small and moderate
/// sizes; entries of U and V are not reduced.
SnfResult smith_normal_form(const IntMatrix& a);

/// Same, for a rational matrix whose entries must all be integers.
/// Throws NonIntegerEntry otherwise.
SnfResult smith_normal_form(const RatMatrix& a);

/// Throws InvariantError unless A = U S V, |det U| = |det V| = 1 and the
/// diagonal forms a divisibility chain.
void verify_snf(const IntMatrix& a, const SnfResult& snf);

/// The cokernel Z^m / A Z^k, computed in (Z/MZ)^m for a modulus M with
/// M Z^m inside the column lattice of A (|det A| works when A is square and
/// nonsingular). Only row operations are recorded, which is all that class
/// coordinates need.
class Cokernel {
public:
    /// Throws InvariantError if the modulus is not positive.
    static Cokernel compute(const IntMatrix& a, const Integer& modulus, bool track_left);

    const Integer& modulus() const noexcept { return modulus_; }

    /// Length m, each entry divides the modulus, divisibility chain.
    const IntVector& diagonal() const noexcept { return diagonal_; }

    /// Diagonal entries > 1, increasing.
    IntVector invariant_factors() const;

    Integer order() const;

    bool has_left_transform() const noexcept { return left_.has_value(); }

    /// Residues of x in each nontrivial factor Z/d_i, in the order of
    /// invariant_factors(). Requires track_left at construction.
    IntVector coordinates(std::span<const Integer> x) const;

private:
    // x -> tail_left * (L^{-1} P x) restricted to the rows after the unit
    // pivots; L is lower triangular with unit pivots on its diagonal.
    struct Transform {
        std::vector<std::size_t> row_perm;
        std::vector<IntVector> lower;
        std::size_t steps = 0;
        IntMatrix tail_left;
    };

    Integer modulus_;
    IntVector diagonal_;
    std::optional<Transform> left_;
};

} // namespace cuspgroup
