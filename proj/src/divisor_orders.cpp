#include "cuspgroup/divisor_orders.hpp"

#include "cuspgroup/circulant.hpp"
#include "cuspgroup/linear_solve.hpp"

#include <array>

namespace cuspgroup {

namespace {

Integer as_integer(std::uint64_t x) { return Integer(static_cast<unsigned long>(x)); }

UnitExponents scaled(const UnitExponents& u, const Integer& k)
{
    UnitExponents out = u;
    for (auto& x : out.e)
        x *= k;
    for (auto& x : out.f)
        x *= k;
    return out;
}

Integer residue_sum(const CurveContext& ctx, const RatVector& v, const Integer& scale, std::size_t from)
{
    Integer s = 0;
    for (std::size_t i = from; i < v.size(); ++i) {
        const Rational y = v[i] * scale;
        s += y.get_num() * as_integer(ctx.alpha_sq_pow(i));
    }
    return s;
}

// Valid multipliers of a fixed preimage form N Z, and N / l can only fail
// to be valid for primes l dividing N / L, all of which lie in {2, 3, p}.
template <class IsValid>
void check_minimal(const CurveContext& ctx, const Integer& order, const Integer& lcm_den, IsValid valid)
{
    const Integer cofactor = order / lcm_den;
    for (const Integer& l : {Integer(2), Integer(3), as_integer(ctx.p())}) {
        if (!mpz_divisible_p(cofactor.get_mpz_t(), l.get_mpz_t()))
            continue;
        CUSPGROUP_ENSURE(!valid(order / l), "a proper divisor of the order also admits a unit");
    }
}

UnitExponents solve_block_system(const CurveContext& ctx, const CuspDivisor& d)
{
    const std::size_t n = ctx.n();
    const RatMatrix block = build_circulant(ctx.a(), CirculantKind::Block, make_rational(1, 12));
    RatVector target(d.p.begin(), d.p.end());
    target.insert(target.end(), d.q.begin(), d.q.end());
    const auto sol = solve_affine(block, target);
    CUSPGROUP_ENSURE(sol.kernel_basis.size() == 1, "block system kernel is not one-dimensional");
    const auto& k = sol.kernel_basis.front();
    for (const auto& x : k)
        CUSPGROUP_ENSURE(x == k.front(), "block system kernel is not spanned by the all-ones vector");

    UnitExponents x;
    const Rational shift = sol.particular[n] / k.front();
    x.e.resize(n);
    x.f.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        x.e[i] = sol.particular[i] - shift * k[i];
        x.f[i] = sol.particular[n + i] - shift * k[n + i];
    }
    return x;
}

void require_class_divisor(const CurveContext& ctx, const CuspDivisor& d)
{
    if (d.p.size() != ctx.n() || d.q.size() != ctx.n())
        throw MathError(ErrorKind::DimensionMismatch, "divisor has the wrong number of cusps");
    if (!d.is_integral())
        throw MathError(ErrorKind::NonIntegerEntry, "divisor has a non-integral coefficient");
    if (d.degree() != 0)
        throw MathError(ErrorKind::NotDegreeZero, "divisor has nonzero degree");
}

} // namespace

CuspDivisor divisor_D(const CurveContext& ctx)
{
    auto d = CuspDivisor::zero(ctx.n());
    d.p[0] = 1;
    d.q[0] = -1;
    return d;
}

CuspDivisor divisor_Dprime(const CurveContext& ctx)
{
    auto d = CuspDivisor::zero(ctx.n());
    d.p[0] += 1;
    d.p[ctx.n() - 1] -= 1;
    return d;
}

BVector b_values(const CurveContext& ctx)
{
    const std::size_t n = ctx.n();
    const RatMatrix inv = invert_matrix(build_circulant(ctx.a(), CirculantKind::Circ));
    BVector out;
    out.b.resize(n);
    for (std::size_t j = 0; j < n; ++j)
        out.b[j] = inv(0, (n - j) % n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            CUSPGROUP_ENSURE(inv(i, j) == out.b[(2 * n - i - j) % n], "inverse is not circ(b_0, b_{n-1}, ..., b_1)");
    return out;
}

UnitExponents spectral_solution_D(const CurveContext& ctx, const BVector& b)
{
    const std::size_t n = ctx.n();
    const Rational shift = make_rational(12, Integer(static_cast<unsigned long>(n * n)));
    auto x = UnitExponents::zero(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Rational& bi = b.b[(n - i) % n];
        x.e[i] = shift + b.b[0] + bi;
        x.f[i] = b.b[0] - bi;
    }
    return x;
}

RatVector spectral_solution_Dprime(const CurveContext& ctx, const BVector& b)
{
    const std::size_t n = ctx.n();
    RatVector c(n);
    for (std::size_t i = 0; i < n; ++i)
        c[i] = b.b[(n - i) % n] - b.b[(n + 1 - i) % n];
    return c;
}

OrderCertificate order_of_Dprime(const CurveContext& ctx)
{
    const std::size_t n = ctx.n();
    const Integer p = as_integer(ctx.p());
    const RatMatrix inv = invert_matrix(build_circulant(ctx.a(), CirculantKind::Circ));
    RatVector t(n, Rational(0));
    t[0] += 1;
    t[n - 1] -= 1;

    OrderCertificate cert;
    cert.solution = UnitExponents::zero(n);
    cert.solution.e = inv.apply(t);
    cert.denominator_lcm = lcm_of_denominators(cert.solution.e);
    const Integer tv = residue_sum(ctx, cert.solution.e, cert.denominator_lcm, 0);
    cert.t_value = tv;
    cert.order = p / gcd(p, tv) * cert.denominator_lcm;
    cert.witness = scaled(cert.solution, cert.order);

    const auto target = divisor_Dprime(ctx);
    CUSPGROUP_ENSURE(check_infty_unit(ctx, cert.witness), "witness is not a P-supported unit");
    CUSPGROUP_ENSURE(divisor_of(ctx, cert.witness) == target.scaled(Rational(cert.order)), "witness divisor != N D'");
    check_minimal(ctx, cert.order, cert.denominator_lcm,
                  [&](const Integer& k) { return check_infty_unit(ctx, scaled(cert.solution, k)); });
    return cert;
}

OrderCertificate order_closed_form_generic(const CurveContext& ctx, const CuspDivisor& d)
{
    require_class_divisor(ctx, d);
    const Integer p = as_integer(ctx.p());

    OrderCertificate cert;
    cert.solution = solve_block_system(ctx, d);
    RatVector all = cert.solution.e;
    all.insert(all.end(), cert.solution.f.begin(), cert.solution.f.end());
    const Integer lcm_den = lcm_of_denominators(all);
    cert.denominator_lcm = lcm_den;

    CongruenceData c;
    c.d1 = residue_sum(ctx, cert.solution.e, lcm_den, 0);
    c.d2 = residue_sum(ctx, cert.solution.f, lcm_den, 1);
    c.d3 = 0;
    for (const auto& x : cert.solution.e)
        c.d3 += Rational(x * lcm_den).get_num() * p;
    for (std::size_t i = 1; i < cert.solution.f.size(); ++i)
        c.d3 += Rational(cert.solution.f[i] * lcm_den).get_num();
    c.n1 = gcd(c.d1, p);
    c.n2 = gcd(c.d2, p);
    c.n3 = gcd(c.d3, Integer(12));
    cert.order = p / gcd(c.n1, c.n2) * (Integer(12) / gcd(c.n3, Integer(12))) * lcm_den;
    cert.congruences = c;
    cert.witness = scaled(cert.solution, cert.order);

    auto valid = [&](const Integer& k) {
        const auto w = scaled(cert.solution, k);
        return w.is_integral() && check_unit(ctx, w);
    };
    CUSPGROUP_ENSURE(valid(cert.order), "witness fails the unit criterion");
    CUSPGROUP_ENSURE(divisor_of(ctx, cert.witness) == d.scaled(Rational(cert.order)), "witness divisor != N D");
    check_minimal(ctx, cert.order, lcm_den, valid);
    return cert;
}

OrderCertificate order_of_D(const CurveContext& ctx) { return order_closed_form_generic(ctx, divisor_D(ctx)); }

} // namespace cuspgroup
