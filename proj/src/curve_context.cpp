#include "cuspgroup/curve_context.hpp"

#include "cuspgroup/error.hpp"
#include "cuspgroup/number_theory.hpp"

namespace cuspgroup {

int beta_for(std::uint64_t p)
{
    switch (p % 12) {
    case 1: return 1;
    case 5: return 5;
    case 7: return -5;
    case 11: return -1;
    default: break;
    }
    throw MathError(ErrorKind::NotPrime, std::to_string(p) + " is not coprime to 6");
}

const Rational& CurveContext::a_at(std::int64_t k) const noexcept
{
    const auto n = static_cast<std::int64_t>(n_);
    auto r = k % n;
    if (r < 0)
        r += n;
    return a_[static_cast<std::size_t>(r)];
}

std::uint64_t CurveContext::alpha_pow(std::uint64_t k) const { return powmod(alpha_, k, p_); }

CurveContext make_context(std::uint64_t p, std::optional<std::uint64_t> alpha)
{
    const std::uint64_t smallest = find_primitive_root(p); // validates p
    CurveContext ctx;
    ctx.p_ = p;
    ctx.n_ = static_cast<std::size_t>((p - 1) / 2);
    if (alpha) {
        if (*alpha < 2 || !is_primitive_root(*alpha, p))
            throw MathError(ErrorKind::NotPrimitiveRoot,
                            std::to_string(*alpha) + " is not a primitive root mod " + std::to_string(p));
        ctx.alpha_ = *alpha;
    } else {
        ctx.alpha_ = smallest;
    }
    ctx.beta_ = beta_for(p);

    const Rational half_p = make_rational(Integer(p), 2);
    ctx.a_.reserve(ctx.n_);
    ctx.alpha_sq_pows_.reserve(ctx.n_);
    std::uint64_t power = 1;
    for (std::size_t i = 0; i < ctx.n_; ++i) {
        ctx.a_.push_back(half_p * bernoulli2_frac(make_rational(Integer(power), Integer(p))));
        power = mulmod(power, ctx.alpha_, p);
    }
    const std::uint64_t alpha_sq = mulmod(ctx.alpha_, ctx.alpha_, p);
    power = 1;
    for (std::size_t i = 0; i < ctx.n_; ++i) {
        ctx.alpha_sq_pows_.push_back(power);
        power = mulmod(power, alpha_sq, p);
    }

    Rational sum = 0;
    const Integer bound = 12 * Integer(p);
    for (const auto& ai : ctx.a_) {
        sum += ai;
        CUSPGROUP_ENSURE(mpz_divisible_p(bound.get_mpz_t(), ai.get_den_mpz_t()) != 0,
                         "denominator of a_i must divide 12p");
    }
    CUSPGROUP_ENSURE(sum == make_rational(-Integer(static_cast<unsigned long>(ctx.n_)), 12), "sum of a_i must be -n/12");
    return ctx;
}

} // namespace cuspgroup
