#include "cuspgroup/circulant.hpp"
#include "cuspgroup/cuspidal_group.hpp"
#include "cuspgroup/divisor_orders.hpp"
#include "cuspgroup/linear_solve.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace cuspgroup;

namespace {

RatVector rats(std::vector<long> xs) { return RatVector(xs.begin(), xs.end()); }

} // namespace

TEST_CASE("b vector at p = 5")
{
    const auto b = b_values(make_context(5, 2));
    CHECK(b.b == RatVector{make_rational(-1, 2), make_rational(-11, 2)});
}

TEST_CASE("b vector reproduces the inverse circulant")
{
    for (std::uint64_t p : {7u, 11u, 13u, 29u}) {
        const auto ctx = make_context(p);
        const std::size_t n = ctx.n();
        const auto b = b_values(ctx).b;
        const auto inv = invert_matrix(build_circulant(ctx.a(), CirculantKind::Circ));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                CHECK(inv(i, j) == b[(2 * n - i - j) % n]);
    }
}

TEST_CASE("P-supported divisor at p = 5")
{
    const auto cert = order_of_Dprime(make_context(5, 2));
    CHECK(cert.solution.e == rats({5, -5}));
    CHECK(cert.denominator_lcm == 1);
    REQUIRE(cert.t_value.has_value());
    CHECK(*cert.t_value == -15);
    CHECK(cert.order == 1);
}

TEST_CASE("mixed divisor at p = 5")
{
    const auto cert = order_of_D(make_context(5, 2));
    CHECK(cert.solution.e == rats({2, -3}));
    CHECK(cert.solution.f == rats({0, 5}));
    REQUIRE(cert.congruences.has_value());
    const auto& c = *cert.congruences;
    CHECK(c.d1 == -10);
    CHECK(c.d2 == 20);
    CHECK(c.d3 == 0);
    CHECK(c.n1 == 5);
    CHECK(c.n2 == 5);
    CHECK(c.n3 == 12);
    CHECK(cert.order == 1);
}

TEST_CASE("distinguished orders")
{
    CHECK(order_of_D(make_context(11)).order == 25);
    CHECK(order_of_Dprime(make_context(11)).order == 5);
    CHECK(order_of_D(make_context(13)).order == 19);
    CHECK(order_of_Dprime(make_context(13)).order == 19);
    CHECK(order_of_D(make_context(17)).order == 1168);
    CHECK(order_of_Dprime(make_context(17)).order == 584);
}

TEST_CASE("closed forms agree with the group computation")
{
    for (std::uint64_t p = 5; p <= 43; ++p) {
        if (!oracle::is_prime_naive(p))
            continue;
        const auto ctx = make_context(p);
        CHECK(order_of_D(ctx).order == order_in_group(ctx, divisor_D(ctx)));
        CHECK(order_of_Dprime(ctx).order == order_in_group(ctx, divisor_Dprime(ctx)));
    }
}

TEST_CASE("witnesses realise the divisor and smaller multiples fail")
{
    for (std::uint64_t p : {11u, 13u, 17u, 19u, 23u}) {
        const auto ctx = make_context(p);
        const auto d = divisor_D(ctx);
        const auto cert = order_of_D(ctx);
        CHECK(check_unit(ctx, cert.witness));
        CHECK(divisor_of(ctx, cert.witness) == d.scaled(Rational(cert.order)));

        // Every k * D with k a proper divisor of N is not principal: all
        // preimages are k * x + t * (1, ..., 1), and integrality forces t to
        // be an integer; the unit conditions are periodic in t modulo 12p.
        const Integer n_ord = cert.order;
        for (Integer k = 1; k < n_ord; ++k) {
            if (n_ord % k != 0)
                continue;
            bool any = false;
            for (long t = 0; t < static_cast<long>(12 * p) && !any; ++t) {
                auto cand = cert.solution;
                for (auto& x : cand.e)
                    x = x * k + t;
                for (auto& x : cand.f)
                    x = x * k + t;
                any = cand.is_integral() && check_unit(ctx, cand);
            }
            CHECK_FALSE(any);
        }

        const auto dp = divisor_Dprime(ctx);
        const auto certp = order_of_Dprime(ctx);
        CHECK(check_infty_unit(ctx, certp.witness));
        CHECK(divisor_of(ctx, certp.witness) == dp.scaled(Rational(certp.order)));
        Rational sum = 0;
        for (const auto& x : certp.solution.e)
            sum += x;
        CHECK(sum == 0);
    }
}

TEST_CASE("generic closed form")
{
    const auto ctx = make_context(13);
    CHECK(order_closed_form_generic(ctx, CuspDivisor::zero(6)).order == 1);
    CHECK(order_closed_form_generic(ctx, divisor_Dprime(ctx)).order == order_of_Dprime(ctx).order);

    auto d = CuspDivisor::zero(6);
    d.p[2] = 3;
    d.q[4] = -1;
    d.q[5] = -2;
    CHECK(order_closed_form_generic(ctx, d).order == order_in_group(ctx, d));

    auto bad = CuspDivisor::zero(6);
    bad.p[0] = 1;
    CHECK_THROWS_AS(order_closed_form_generic(ctx, bad), MathError);
}

TEST_CASE("spectral solutions match the direct solves")
{
    for (std::uint64_t p : {5u, 7u, 11u, 13u, 17u, 31u}) {
        const auto ctx = make_context(p);
        const auto b = b_values(ctx);
        CHECK(spectral_solution_D(ctx, b) == order_of_D(ctx).solution);
        CHECK(spectral_solution_Dprime(ctx, b) == order_of_Dprime(ctx).solution.e);
        CHECK(divisor_of(ctx, spectral_solution_D(ctx, b)) == divisor_D(ctx));
    }
}
