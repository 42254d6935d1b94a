#include "cuspgroup/number_theory.hpp"

#include "cuspgroup/error.hpp"

#include <array>

namespace cuspgroup {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1)
            result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m)
{
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    CUSPGROUP_ENSURE(r == 1, "invmod of a non-unit");
    if (t < 0)
        t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    static constexpr std::array<std::uint64_t, 12> witnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto w : witnesses) {
        if (n % w == 0)
            return n == w;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (auto w : witnesses) {
        std::uint64_t x = powmod(w, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

bool is_primitive_root(std::uint64_t g, std::uint64_t p)
{
    if (g % p == 0)
        return false;
    for (auto q : prime_factors(p - 1))
        if (powmod(g, (p - 1) / q, p) == 1)
            return false;
    return true;
}

std::uint64_t find_primitive_root(std::uint64_t p)
{
    if (!is_prime(p))
        throw MathError(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (p < 5)
        throw MathError(ErrorKind::TooSmall, "p must be at least 5, got " + std::to_string(p));
    for (std::uint64_t g = 2; g < p; ++g)
        if (is_primitive_root(g, p))
            return g;
    invariant_failed("primitive root exists", __FILE__, __LINE__, "none found below p");
}

Rational bernoulli2_frac(const Rational& x)
{
    const Rational y = fractional_part(x);
    return y * y - y + make_rational(1, 6);
}

} // namespace cuspgroup
