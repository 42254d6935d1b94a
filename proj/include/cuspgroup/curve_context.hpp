#pragma once

#include "cuspgroup/arith.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace cuspgroup {

/// Immutable data attached to X1(p) and a fixed primitive root alpha.
///
/// The Bernoulli vector a_i = (p/2) B2({alpha^i / p}), 0 <= i < n, drives
/// every divisor computation; cusps P_i and Q_i are indexed through the
/// same alpha. Safe to share across threads once constructed.
class CurveContext {
public:
    std::uint64_t p() const noexcept { return p_; }
    std::size_t n() const noexcept { return n_; }
    std::uint64_t alpha() const noexcept { return alpha_; }
    int beta() const noexcept { return beta_; }

    /// p in {5, 7}: the cusp description is only classical for p = 11 or p >= 13.
    bool small_prime_warning() const noexcept { return p_ < 11; }

    std::span<const Rational> a() const noexcept { return a_; }

    /// a_{[k]} with the index reduced mod n (any integer k).
    const Rational& a_at(std::int64_t k) const noexcept;

    /// alpha^k mod p.
    std::uint64_t alpha_pow(std::uint64_t k) const;

    /// alpha^(2i) mod p for 0 <= i < n.
    std::uint64_t alpha_sq_pow(std::size_t i) const noexcept { return alpha_sq_pows_[i]; }

    friend CurveContext make_context(std::uint64_t p, std::optional<std::uint64_t> alpha);

private:
    CurveContext() = default;

    std::uint64_t p_ = 0;
    std::size_t n_ = 0;
    std::uint64_t alpha_ = 0;
    int beta_ = 0;
    RatVector a_;
    std::vector<std::uint64_t> alpha_sq_pows_;
};

/// Builds the context; alpha defaults to the smallest primitive root.
/// Throws NotPrime, TooSmall or NotPrimitiveRoot.
CurveContext make_context(std::uint64_t p, std::optional<std::uint64_t> alpha = std::nullopt);

/// beta in {1, -1, 5, -5} with p = beta mod 12.
int beta_for(std::uint64_t p);

} // namespace cuspgroup
