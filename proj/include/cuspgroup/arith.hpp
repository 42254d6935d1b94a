#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cuspgroup {

// Arbitrary-precision scalars. mpq_class keeps values canonical (reduced,
// positive denominator) after every arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

// num/den reduced to canonical form; den != 0.
inline Rational make_rational(const Integer& num, const Integer& den)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integral(const Rational& x) { return x.get_den() == 1; }

inline bool all_integral(std::span<const Rational> xs)
{
    for (const auto& x : xs)
        if (!is_integral(x))
            return false;
    return true;
}

// Least non-negative residue; m > 0.
inline Integer mod_floor(const Integer& a, const Integer& m)
{
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Integer floor_of(const Rational& x)
{
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

// {x} = x - floor(x), in [0, 1).
inline Rational fractional_part(const Rational& x) { return x - Rational(floor_of(x)); }

inline Integer gcd(const Integer& a, const Integer& b)
{
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer lcm(const Integer& a, const Integer& b)
{
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Integer lcm_of_denominators(std::span<const Rational> xs);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

IntVector to_integers(std::span<const Rational> xs);
RatVector to_rationals(std::span<const Integer> xs);

} // namespace cuspgroup
