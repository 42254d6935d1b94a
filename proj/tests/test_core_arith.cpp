#include "cuspgroup/curve_context.hpp"
#include "cuspgroup/error.hpp"
#include "cuspgroup/number_theory.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace cuspgroup;

namespace {

Rational q(long num, long den) { return make_rational(num, den); }

} // namespace

TEST_CASE("primitive root examples")
{
    CHECK(find_primitive_root(11) == 2);
    CHECK(find_primitive_root(5) == 2);
    CHECK(find_primitive_root(7) == 3);
    CHECK(find_primitive_root(17) == 3);
    CHECK(find_primitive_root(23) == 5);
}

TEST_CASE("primitive root errors")
{
    auto kind_of = [](std::uint64_t p) {
        try {
            find_primitive_root(p);
        } catch (const MathError& e) {
            return e.kind();
        }
        return ErrorKind::Usage;
    };
    CHECK(kind_of(15) == ErrorKind::NotPrime);
    CHECK(kind_of(1) == ErrorKind::NotPrime);
    CHECK(kind_of(3) == ErrorKind::TooSmall);
    CHECK(kind_of(2) == ErrorKind::TooSmall);
}

TEST_CASE("primitive root is the smallest generator for every prime below 1000")
{
    for (std::uint64_t p = 5; p < 1000; ++p) {
        if (!oracle::is_prime_naive(p))
            continue;
        const std::uint64_t g = find_primitive_root(p);
        CHECK(oracle::multiplicative_order(g, p) == p - 1);
        for (std::uint64_t h = 2; h < g; ++h)
            CHECK(oracle::multiplicative_order(h, p) < p - 1);
    }
}

TEST_CASE("primality agrees with trial division")
{
    for (std::uint64_t n = 0; n < 5000; ++n)
        CHECK(is_prime(n) == oracle::is_prime_naive(n));
    CHECK(is_prime(18446744073709551557ull));
    CHECK_FALSE(is_prime(18446744073709551555ull));
    CHECK_FALSE(is_prime(3215031751ull)); // strong pseudoprime to bases 2, 3, 5, 7
}

TEST_CASE("modular helpers")
{
    CHECK(powmod(2, 10, 1000) == 24);
    CHECK(mulmod(1ull << 62, 4, (1ull << 63) + 1) == ((1ull << 63) + 1) - 2);
    CHECK(invmod(3, 11) * 3 % 11 == 1);
}

TEST_CASE("second Bernoulli polynomial at fractional parts")
{
    CHECK(bernoulli2_frac(0) == q(1, 6));
    CHECK(bernoulli2_frac(q(1, 2)) == q(-1, 12));
    CHECK(bernoulli2_frac(q(1, 5)) == q(1, 150));
    CHECK(bernoulli2_frac(q(7, 3)) == bernoulli2_frac(q(1, 3)));
    CHECK(bernoulli2_frac(q(-2, 7)) == bernoulli2_frac(q(2, 7)));
    CHECK(bernoulli2_frac(-5) == q(1, 6));
}

TEST_CASE("rationals stay canonical")
{
    const Rational x = make_rational(6, -4);
    CHECK(x.get_num() == -3);
    CHECK(x.get_den() == 2);
    CHECK(to_string(x) == "-3/2");
    CHECK(to_string(make_rational(10, 5)) == "2");
    CHECK(lcm_of_denominators(std::vector<Rational>{q(1, 4), q(1, 6), 3}) == 12);
    CHECK_THROWS_AS(to_integers(std::vector<Rational>{q(1, 2)}), MathError);
}

TEST_CASE("context for p = 11")
{
    const auto ctx = make_context(11, 2);
    CHECK(ctx.n() == 5);
    CHECK(ctx.beta() == -1);
    CHECK_FALSE(ctx.small_prime_warning());
    const std::vector<Rational> expected = {q(61, 132), q(13, 132), q(-47, 132), q(-23, 132), q(-59, 132)};
    CHECK(std::vector<Rational>(ctx.a().begin(), ctx.a().end()) == expected);
}

TEST_CASE("context for p = 5 and default alpha for p = 17")
{
    const auto c5 = make_context(5, 2);
    CHECK(c5.n() == 2);
    CHECK(c5.beta() == 5);
    CHECK(c5.small_prime_warning());
    CHECK(std::vector<Rational>(c5.a().begin(), c5.a().end()) == std::vector<Rational>{q(1, 60), q(-11, 60)});

    const auto c17 = make_context(17);
    CHECK(c17.alpha() == 3);
    CHECK(c17.beta() == 5);
}

TEST_CASE("context errors")
{
    CHECK_THROWS_AS(make_context(11, 3), MathError); // 3 has order 5 mod 11
    try {
        make_context(11, 3);
    } catch (const MathError& e) {
        CHECK(e.kind() == ErrorKind::NotPrimitiveRoot);
    }
    CHECK_THROWS_AS(make_context(21), MathError);
    CHECK_THROWS_AS(make_context(3), MathError);
}

TEST_CASE("beta is p mod 12 in {1, -1, 5, -5}")
{
    CHECK(beta_for(13) == 1);
    CHECK(beta_for(11) == -1);
    CHECK(beta_for(17) == 5);
    CHECK(beta_for(19) == -5);
}

TEST_CASE("Bernoulli vector matches a direct evaluation and sums to -n/12")
{
    for (std::uint64_t p = 5; p <= 199; ++p) {
        if (!oracle::is_prime_naive(p))
            continue;
        const auto ctx = make_context(p);
        const auto ref = oracle::bernoulli_vector(p, ctx.alpha());
        CHECK(std::vector<Rational>(ctx.a().begin(), ctx.a().end()) == ref);
        Rational s = 0;
        for (const auto& x : ctx.a()) {
            s += x;
            CHECK(mpz_divisible_p(Integer(12 * p).get_mpz_t(), x.get_den_mpz_t()));
        }
        CHECK(s == make_rational(-Integer(static_cast<unsigned long>(ctx.n())), 12));
    }
}

TEST_CASE("index periodicity: shifting by n gives the same value")
{
    for (std::uint64_t p : {11u, 13u, 29u, 97u}) {
        const auto ctx = make_context(p);
        const std::uint64_t n = ctx.n();
        for (std::uint64_t i = 0; i < n; ++i) {
            const Rational shifted = Rational(static_cast<unsigned long>(p), 2) *
                                     bernoulli2_frac(make_rational(static_cast<unsigned long>(ctx.alpha_pow(i + n)),
                                                                   static_cast<unsigned long>(p)));
            CHECK(shifted == ctx.a()[i]);
            CHECK(ctx.a_at(static_cast<std::int64_t>(i + n)) == ctx.a()[i]);
            CHECK(ctx.a_at(-static_cast<std::int64_t>(n - i)) == ctx.a()[i]);
        }
    }
}
