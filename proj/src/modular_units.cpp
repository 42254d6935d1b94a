#include "cuspgroup/modular_units.hpp"

#include "cuspgroup/number_theory.hpp"

namespace cuspgroup {

Rational CuspDivisor::degree() const
{
    Rational s = 0;
    for (const auto& x : p)
        s += x;
    for (const auto& x : q)
        s += x;
    return s;
}

bool CuspDivisor::is_zero() const
{
    for (const auto& x : p)
        if (x != 0)
            return false;
    for (const auto& x : q)
        if (x != 0)
            return false;
    return true;
}

CuspDivisor CuspDivisor::scaled(const Rational& k) const
{
    CuspDivisor out = *this;
    for (auto& x : out.p)
        x *= k;
    for (auto& x : out.q)
        x *= k;
    return out;
}

CuspDivisor CuspDivisor::operator+(const CuspDivisor& other) const
{
    if (p.size() != other.p.size() || q.size() != other.q.size())
        throw MathError(ErrorKind::DimensionMismatch, "divisors over different cusp sets");
    CuspDivisor out = *this;
    for (std::size_t i = 0; i < p.size(); ++i)
        out.p[i] += other.p[i];
    for (std::size_t i = 0; i < q.size(); ++i)
        out.q[i] += other.q[i];
    return out;
}

CuspDivisor CuspDivisor::operator-(const CuspDivisor& other) const { return *this + other.scaled(-1); }

namespace {

void require_shape(const CurveContext& ctx, const UnitExponents& u)
{
    if (u.e.size() != ctx.n() || u.f.size() != ctx.n())
        throw MathError(ErrorKind::DimensionMismatch, "exponent vectors must have length n");
}

// sum_i x_i alpha^{2i} mod p for integral x.
Integer weighted_residue(const CurveContext& ctx, const RatVector& x)
{
    Integer s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0)
            s += x[i].get_num() * Integer(static_cast<unsigned long>(ctx.alpha_sq_pow(i)));
    return mod_floor(s, Integer(static_cast<unsigned long>(ctx.p())));
}

Rational sum_of(const RatVector& x)
{
    Rational s = 0;
    for (const auto& v : x)
        s += v;
    return s;
}

// alpha^{2i+2} under the policy.
Integer square_power(const CurveContext& ctx, std::size_t i, ExponentPolicy policy)
{
    Integer t;
    const Integer alpha(static_cast<unsigned long>(ctx.alpha()));
    mpz_pow_ui(t.get_mpz_t(), alpha.get_mpz_t(), 2 * i + 2);
    if (policy == ExponentPolicy::Reduced) {
        const Integer p(static_cast<unsigned long>(ctx.p()));
        t = mod_floor(t, p * p);
    }
    return t;
}

UnitExponents make_G(const CurveContext& ctx, std::size_t i, ExponentPolicy policy)
{
    const std::size_t n = ctx.n(), last = n - 1;
    const Integer p(static_cast<unsigned long>(ctx.p()));
    auto u = UnitExponents::zero(n);
    if (i == last) {
        u.e[last] = p;
        u.f[last] = -Integer(ctx.beta()) * p;
        return u;
    }
    const Integer t = square_power(ctx, i, policy);
    u.e[i] += 1;
    u.e[last] -= t;
    u.f[last] += p * (t - 1);
    return u;
}

UnitExponents make_H(const CurveContext& ctx, std::size_t i, ExponentPolicy policy)
{
    const std::size_t n = ctx.n(), last = n - 1;
    const Integer p(static_cast<unsigned long>(ctx.p()));
    auto u = UnitExponents::zero(n);
    if (i == last) {
        u.f[last] = 12 * p;
        return u;
    }
    const Integer t = square_power(ctx, i, policy);
    u.f[i] += 1;
    u.f[last] += -t + p * Integer(ctx.beta()) * (t - 1);
    return u;
}

} // namespace

bool check_unit(const CurveContext& ctx, const UnitExponents& u)
{
    require_shape(ctx, u);
    if (!u.is_integral())
        throw MathError(ErrorKind::NonIntegerExponent, "unit criterion needs integral exponents");
    if (weighted_residue(ctx, u.e) != 0 || weighted_residue(ctx, u.f) != 0)
        return false;
    const Rational total = Integer(static_cast<unsigned long>(ctx.p())) * sum_of(u.e) + sum_of(u.f);
    return mod_floor(total.get_num(), Integer(12)) == 0;
}

bool check_infty_unit(const CurveContext& ctx, const UnitExponents& u)
{
    require_shape(ctx, u);
    for (const auto& x : u.f)
        if (x != 0)
            return false;
    if (!all_integral(u.e))
        return false;
    return weighted_residue(ctx, u.e) == 0 && sum_of(u.e) == 0;
}

CuspDivisor divisor_of(const CurveContext& ctx, const UnitExponents& u)
{
    require_shape(ctx, u);
    const std::size_t n = ctx.n();
    const auto a = ctx.a();
    const Rational e_sum = sum_of(u.e), f_sum = sum_of(u.f);
    const Rational e_shift = e_sum / 12, f_shift = f_sum / 12;

    std::vector<std::size_t> e_support, f_support;
    for (std::size_t j = 0; j < n; ++j) {
        if (u.e[j] != 0)
            e_support.push_back(j);
        if (u.f[j] != 0)
            f_support.push_back(j);
    }

    auto out = CuspDivisor::zero(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational& ord_p = out.p[i];
        ord_p = f_shift;
        for (std::size_t j : e_support)
            ord_p += u.e[j] * a[(i + j) % n];
        Rational& ord_q = out.q[i];
        ord_q = e_shift;
        for (std::size_t j : f_support)
            ord_q += u.f[j] * a[(i + j) % n];
    }
    return out;
}

std::vector<UnitExponents> basis_full(const CurveContext& ctx, ExponentPolicy policy)
{
    const std::size_t n = ctx.n();
    std::vector<UnitExponents> out;
    out.reserve(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(make_G(ctx, i, policy));
    for (std::size_t i = 1; i < n; ++i)
        out.push_back(make_H(ctx, i, policy));
    return out;
}

std::vector<UnitExponents> basis_full_with_h0(const CurveContext& ctx, std::size_t replaced, ExponentPolicy policy)
{
    const std::size_t n = ctx.n();
    if (replaced < 1 || replaced + 2 > n)
        throw MathError(ErrorKind::IndexOutOfRange, "replaced H index must lie in [1, n-2]");
    auto out = basis_full(ctx, policy);
    out[n + replaced - 1] = make_H(ctx, 0, policy);
    return out;
}

std::vector<UnitExponents> basis_infty(const CurveContext& ctx, ExponentPolicy policy)
{
    const std::size_t n = ctx.n();
    const Integer p(static_cast<unsigned long>(ctx.p()));
    const Integer alpha(static_cast<unsigned long>(ctx.alpha()));
    Integer gamma;
    if (policy == ExponentPolicy::Reduced)
        gamma = Integer(static_cast<unsigned long>(ctx.alpha_pow(ctx.p() - 2)));
    else
        mpz_pow_ui(gamma.get_mpz_t(), alpha.get_mpz_t(), ctx.p() - 2);
    const Integer g = gamma * gamma;

    std::vector<UnitExponents> out;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        auto u = UnitExponents::zero(n);
        u.e[i - 1] += 1;
        u.e[i] += -g - 1;
        u.e[i + 1] += g;
        out.push_back(std::move(u));
    }
    if (n >= 2) {
        auto u = UnitExponents::zero(n);
        u.e[n - 2] = p;
        u.e[n - 1] = -p;
        out.push_back(std::move(u));
    }
    return out;
}

UnitExponents make_In(const CurveContext& ctx)
{
    const std::size_t n = ctx.n();
    const std::uint64_t p = ctx.p();
    auto u = UnitExponents::zero(n);
    if (p % 4 == 1) {
        u.e[0] += 6;
        u.e[n / 2] += 6;
        return u;
    }
    const bool three_mod_eight = p % 8 == 3;
    const std::uint64_t target = three_mod_eight ? p - 2 : 2;
    for (std::size_t m = 0; m < n; ++m)
        if (ctx.alpha_sq_pow(m) == target) {
            u.e[0] += three_mod_eight ? 8 : 24;
            u.e[m] += three_mod_eight ? 4 : -12;
            return u;
        }
    invariant_failed("square root found", __FILE__, __LINE__, "+-2 is not a square power of alpha");
}

std::vector<UnitExponents> basis_rational(const CurveContext& ctx, ExponentPolicy policy)
{
    auto out = basis_infty(ctx, policy);
    out.push_back(make_In(ctx));
    return out;
}

H0Relation h0_relation(const CurveContext& ctx, ExponentPolicy policy)
{
    const std::size_t n = ctx.n(), last = n - 1;
    const Integer p(static_cast<unsigned long>(ctx.p()));
    const Integer beta(ctx.beta());

    // F = prod_{i<n-1} G_i H_i. Removing the all-ones exponent vector, whose
    // divisor vanishes, leaves exponents only at index n-1.
    auto product = UnitExponents::zero(n);
    for (std::size_t i = 0; i < last; ++i)
        for (const auto& u : {make_G(ctx, i, policy), make_H(ctx, i, policy)})
            for (std::size_t j = 0; j < n; ++j) {
                product.e[j] += u.e[j];
                product.f[j] += u.f[j];
            }
    const Integer e_rest = product.e[last].get_num() - 1;
    const Integer f_rest = product.f[last].get_num() - 1;

    if (!mpz_divisible_p(e_rest.get_mpz_t(), p.get_mpz_t()))
        throw MathError(ErrorKind::IntegralityViolation, "E_{n-1} exponent of the product is not a multiple of p");
    H0Relation rel;
    rel.c2 = e_rest / p;
    const Integer f_residual = f_rest + beta * p * rel.c2;
    if (!mpz_divisible_p(f_residual.get_mpz_t(), Integer(12 * p).get_mpz_t()))
        throw MathError(ErrorKind::IntegralityViolation, "F_{n-1} residual is not a multiple of 12p");
    rel.c3 = f_residual / (12 * p);

    const auto lhs = divisor_of(ctx, product);
    const auto rhs = divisor_of(ctx, make_G(ctx, last, policy)).scaled(Rational(rel.c2)) +
                     divisor_of(ctx, make_H(ctx, last, policy)).scaled(Rational(rel.c3));
    CUSPGROUP_ENSURE(lhs == rhs, "h0 relation does not hold at divisor level");
    return rel;
}

} // namespace cuspgroup
