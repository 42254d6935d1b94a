#include "cuspgroup/arith.hpp"

#include "cuspgroup/error.hpp"

namespace cuspgroup {

Integer lcm_of_denominators(std::span<const Rational> xs)
{
    Integer l = 1;
    for (const auto& x : xs)
        l = lcm(l, x.get_den());
    return l;
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x)
{
    if (x.get_den() == 1)
        return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

IntVector to_integers(std::span<const Rational> xs)
{
    IntVector out;
    out.reserve(xs.size());
    for (const auto& x : xs) {
        if (!is_integral(x))
            throw MathError(ErrorKind::NonIntegerEntry, "value " + to_string(x) + " is not an integer");
        out.push_back(x.get_num());
    }
    return out;
}

RatVector to_rationals(std::span<const Integer> xs)
{
    RatVector out;
    out.reserve(xs.size());
    for (const auto& x : xs)
        out.emplace_back(x);
    return out;
}

} // namespace cuspgroup
