#include "cuspgroup/cuspidal_group.hpp"
#include "cuspgroup/determinant.hpp"
#include "cuspgroup/modular_units.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace cuspgroup;

namespace {

UnitExponents exps(std::vector<long> e, std::vector<long> f)
{
    UnitExponents u;
    for (long x : e)
        u.e.emplace_back(x);
    for (long x : f)
        u.f.emplace_back(x);
    return u;
}

RatVector rats(std::vector<long> xs) { return RatVector(xs.begin(), xs.end()); }

} // namespace

TEST_CASE("unit criterion examples")
{
    const auto ctx = make_context(11, 2);
    CHECK(check_unit(ctx, exps({0, 0, 0, 0, 0}, {0, 0, 0, 0, 132})));
    CHECK(check_unit(ctx, UnitExponents::zero(5)));
    CHECK_FALSE(check_unit(ctx, exps({0, 0, 0, 0, 0}, {1, 0, 0, 0, 0})));
    // Congruences mod p hold but the mod 12 condition fails.
    CHECK_FALSE(check_unit(ctx, exps({0, 0, 0, 0, 0}, {0, 0, 0, 0, 11})));

    auto half = UnitExponents::zero(5);
    half.e[0] = make_rational(1, 2);
    CHECK_THROWS_AS(check_unit(ctx, half), MathError);
    CHECK_THROWS_AS(check_unit(ctx, UnitExponents::zero(4)), MathError);
}

TEST_CASE("P-supported unit criterion examples")
{
    const auto ctx = make_context(11, 2);
    CHECK(check_infty_unit(ctx, exps({0, 0, 0, 11, -11}, {0, 0, 0, 0, 0})));
    CHECK(check_infty_unit(ctx, UnitExponents::zero(5)));
    CHECK_FALSE(check_infty_unit(ctx, exps({1, 0, 0, 0, 0}, {0, 0, 0, 0, 0})));
    CHECK_FALSE(check_infty_unit(ctx, exps({0, 0, 0, 0, 0}, {0, 0, 0, 0, 132})));
    auto half = UnitExponents::zero(5);
    half.e[0] = make_rational(1, 2);
    half.e[1] = make_rational(-1, 2);
    CHECK_FALSE(check_infty_unit(ctx, half));
}

TEST_CASE("divisor examples for p = 11")
{
    const auto ctx = make_context(11, 2);
    const auto h = divisor_of(ctx, exps({0, 0, 0, 0, 0}, {0, 0, 0, 0, 132}));
    CHECK(h.p == rats({11, 11, 11, 11, 11}));
    CHECK(h.q == rats({-59, 61, 13, -47, -23}));
    CHECK(h.degree() == 0);

    const auto i4 = divisor_of(ctx, exps({0, 0, 0, 11, -11}, {0, 0, 0, 0, 0}));
    CHECK(i4.p == rats({3, -10, 4, 5, -2}));
    CHECK(i4.q == rats({0, 0, 0, 0, 0}));

    CHECK(divisor_of(ctx, UnitExponents::zero(5)).is_zero());
}

TEST_CASE("full basis shape and examples")
{
    const auto c11 = make_context(11, 2);
    const auto b11 = basis_full(c11);
    CHECK(b11.size() == 9);
    CHECK(b11.back() == exps({0, 0, 0, 0, 0}, {0, 0, 0, 0, 132}));

    const auto c5 = make_context(5, 2);
    const auto b5 = basis_full(c5);
    REQUIRE(b5.size() == 3);
    CHECK(b5[1] == exps({0, 5}, {0, -25}));
    // G_0 with t = alpha^2 = 4: E_0 E_1^{-4} F_1^{15}.
    CHECK(b5[0] == exps({1, -4}, {0, 15}));
    CHECK(b5[2] == exps({0, 0}, {0, 60}));
}

TEST_CASE("every full basis unit satisfies the criterion with an integral degree-0 divisor")
{
    for (std::uint64_t p = 5; p <= 199; ++p) {
        if (!oracle::is_prime_naive(p))
            continue;
        const auto ctx = make_context(p);
        const auto basis = basis_full(ctx);
        CHECK(basis.size() == p - 2);
        for (const auto& u : basis) {
            CHECK(check_unit(ctx, u));
            const auto d = divisor_of(ctx, u);
            CHECK(d.is_integral());
            CHECK(d.degree() == 0);
        }
    }
}

TEST_CASE("P-supported basis")
{
    const auto ctx = make_context(11, 2);
    const auto b = basis_infty(ctx);
    REQUIRE(b.size() == 4);
    CHECK(b[3] == exps({0, 0, 0, 11, -11}, {0, 0, 0, 0, 0}));
    // gamma = 2^9 = 6 mod 11, so gamma^2 = 36.
    CHECK(b[0] == exps({1, -37, 36, 0, 0}, {0, 0, 0, 0, 0}));

    const auto literal = basis_infty(ctx, ExponentPolicy::Literal);
    const Integer g = Integer(1) << 18;
    CHECK(literal[0].e[1] == Rational(-g - 1));
    CHECK(literal[0].e[2] == Rational(g));

    for (std::uint64_t p : {11u, 13u, 17u, 23u, 29u, 31u, 61u}) {
        const auto c = make_context(p);
        for (auto policy : {ExponentPolicy::Reduced, ExponentPolicy::Literal})
            for (const auto& u : basis_infty(c, policy)) {
                CHECK(check_infty_unit(c, u));
                CHECK(check_unit(c, u));
                for (const auto& x : divisor_of(c, u).q)
                    CHECK(x == 0);
            }
    }
}

TEST_CASE("rational generator")
{
    const auto c13 = make_context(13);
    CHECK(make_In(c13) == exps({6, 0, 0, 6, 0, 0}, {0, 0, 0, 0, 0, 0}));
    const auto c11 = make_context(11, 2);
    CHECK(make_In(c11) == exps({8, 0, 0, 4, 0}, {0, 0, 0, 0, 0}));
    const auto c7 = make_context(7, 3);
    CHECK(make_In(c7) == exps({24, -12, 0}, {0, 0, 0}));

    for (std::uint64_t p = 5; p <= 199; ++p) {
        if (!oracle::is_prime_naive(p))
            continue;
        const auto ctx = make_context(p);
        const auto u = make_In(ctx);
        CHECK(check_unit(ctx, u));
        const auto d = divisor_of(ctx, u);
        CHECK(d.q == RatVector(ctx.n(), Rational(1)));
        CHECK(d.is_integral());
    }
}

TEST_CASE("rational basis")
{
    const auto ctx = make_context(11);
    const auto b = basis_rational(ctx);
    CHECK(b.size() == 5);
    for (const auto& u : b)
        CHECK(check_unit(ctx, u));
    CHECK(divisor_of(ctx, b.back()).q == RatVector(5, Rational(1)));
}

TEST_CASE("relation for the product of G_i H_i")
{
    const auto r5 = h0_relation(make_context(5, 2));
    CHECK(r5.c2 == -1);
    CHECK(r5.c3 == 1);
    for (std::uint64_t p : {7u, 11u, 13u, 17u, 19u, 23u, 29u, 37u, 101u}) {
        const auto ctx = make_context(p);
        CHECK_NOTHROW(h0_relation(ctx));
        CHECK_NOTHROW(h0_relation(ctx, ExponentPolicy::Literal));
    }
}

TEST_CASE("divisors with reduced indices match the unreduced evaluation")
{
    for (std::uint64_t p = 5; p <= 31; ++p) {
        if (!oracle::is_prime_naive(p))
            continue;
        const auto ctx = make_context(p);
        auto units = basis_full(ctx);
        for (const auto& u : basis_rational(ctx))
            units.push_back(u);
        for (const auto& u : units) {
            const auto d = divisor_of(ctx, u);
            const auto ref = oracle::divisor_unreduced(p, ctx.alpha(), u.e, u.f);
            CHECK(d.p == ref.p);
            CHECK(d.q == ref.q);
        }
    }
}

TEST_CASE("H_0 swap leaves |det| unchanged")
{
    for (std::uint64_t p : {11u, 13u, 17u, 19u}) {
        const auto ctx = make_context(p);
        const Integer ref = abs(det_integer(divisor_matrix(ctx, basis_full(ctx), Lattice::Full)));
        for (std::size_t i = 1; i + 2 <= ctx.n(); ++i) {
            const auto swapped = basis_full_with_h0(ctx, i);
            CHECK(abs(det_integer(divisor_matrix(ctx, swapped, Lattice::Full))) == ref);
        }
    }
    CHECK_THROWS_AS(basis_full_with_h0(make_context(11), 0), MathError);
    CHECK_THROWS_AS(basis_full_with_h0(make_context(11), 4), MathError);
}

TEST_CASE("literal and reduced exponents give the same groups")
{
    for (std::uint64_t p : {11u, 13u, 17u, 19u, 23u}) {
        const auto ctx = make_context(p);
        for (auto lattice : {Lattice::Full, Lattice::Infty}) {
            const auto reduced = lattice == Lattice::Full ? basis_full(ctx) : basis_infty(ctx);
            const auto literal = lattice == Lattice::Full ? basis_full(ctx, ExponentPolicy::Literal)
                                                          : basis_infty(ctx, ExponentPolicy::Literal);
            const auto m1 = divisor_matrix(ctx, reduced, lattice);
            const auto m2 = divisor_matrix(ctx, literal, lattice);
            const auto s1 = smith_normal_form(m1).invariant_factors;
            const auto s2 = smith_normal_form(m2).invariant_factors;
            CHECK(s1 == s2);
        }
    }
}

TEST_CASE("cusp divisor arithmetic")
{
    auto d = CuspDivisor::zero(3);
    d.p[0] = 2;
    d.q[2] = -2;
    CHECK(d.degree() == 0);
    CHECK((d + d).p[0] == 4);
    CHECK((d - d).is_zero());
    CHECK(d.scaled(make_rational(1, 2)).q[2] == -1);
    CHECK_THROWS_AS(d + CuspDivisor::zero(2), MathError);
}
