#include "cuspgroup/invariant_suite.hpp"

#include "cuspgroup/cuspidal_group.hpp"
#include "cuspgroup/determinant.hpp"
#include "cuspgroup/divisor_orders.hpp"

#include <functional>

namespace cuspgroup {

namespace {

void run_check(std::vector<CheckResult>& out, std::string name, const std::function<std::string()>& body)
{
    CheckResult r{std::move(name), false, {}};
    try {
        r.detail = body();
        r.ok = r.detail.empty();
        if (r.ok)
            r.detail = "ok";
    } catch (const std::exception& e) {
        r.detail = e.what();
    }
    out.push_back(std::move(r));
}

std::string expect(bool cond, const std::string& msg) { return cond ? std::string() : msg; }

} // namespace

std::vector<CheckResult> run_invariant_suite(const CurveContext& ctx)
{
    std::vector<CheckResult> out;
    const std::size_t n = ctx.n();

    run_check(out, "bernoulli_sum", [&] {
        Rational s = 0;
        for (const auto& a : ctx.a())
            s += a;
        return expect(s == make_rational(-Integer(static_cast<unsigned long>(n)), 12), "sum of a_i != -n/12");
    });

    run_check(out, "full_basis_units", [&] {
        const auto basis = basis_full(ctx);
        if (basis.size() != ctx.p() - 2)
            return std::string("basis does not have p - 2 elements");
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (!check_unit(ctx, basis[k]))
                return "element " + std::to_string(k) + " fails the unit criterion";
            const auto d = divisor_of(ctx, basis[k]);
            if (!d.is_integral() || d.degree() != 0)
                return "element " + std::to_string(k) + " has a non-integral or nonzero-degree divisor";
        }
        return std::string();
    });

    run_check(out, "infty_basis_units", [&] {
        for (const auto& u : basis_infty(ctx)) {
            if (!check_infty_unit(ctx, u))
                return std::string("element fails the P-supported unit criterion");
            for (const auto& c : divisor_of(ctx, u).q)
                if (c != 0)
                    return std::string("divisor has a Q component");
        }
        return std::string();
    });

    run_check(out, "rational_generator", [&] {
        const auto u = make_In(ctx);
        if (!check_unit(ctx, u))
            return std::string("fails the unit criterion");
        for (const auto& c : divisor_of(ctx, u).q)
            if (c != 1)
                return std::string("Q coefficients are not all 1");
        return std::string();
    });

    run_check(out, "h0_relation", [&] {
        h0_relation(ctx);
        return std::string();
    });

    Integer order;
    run_check(out, "class_number_routes", [&] {
        const Integer snf = class_number(ctx, ClassNumberMethod::Snf);
        const Integer circ = class_number(ctx, ClassNumberMethod::Circulant);
        order = group_structure(ctx).order;
        return expect(snf == circ && snf == order,
                      "snf " + snf.get_str() + ", circulant " + circ.get_str() + ", group " + order.get_str());
    });

    run_check(out, "square_relation", [&] {
        const Integer rational = rational_group_structure(ctx).order;
        return expect(rational * rational == group_structure(ctx).order, "full order != rational order squared");
    });

    run_check(out, "order_of_D", [&] {
        const Integer closed = order_of_D(ctx).order;
        const Integer oracle = order_in_group(ctx, divisor_D(ctx));
        return expect(closed == oracle, "closed form " + closed.get_str() + " vs group " + oracle.get_str());
    });

    run_check(out, "order_of_Dprime", [&] {
        const Integer closed = order_of_Dprime(ctx).order;
        const Integer oracle = order_in_group(ctx, divisor_Dprime(ctx));
        return expect(closed == oracle, "closed form " + closed.get_str() + " vs group " + oracle.get_str());
    });

    run_check(out, "spectral_solutions", [&] {
        const auto b = b_values(ctx);
        if (spectral_solution_D(ctx, b) != order_of_D(ctx).solution)
            return std::string("b-expression for P0 - Q0 differs from the solve");
        return expect(spectral_solution_Dprime(ctx, b) == order_of_Dprime(ctx).solution.e,
                      "b-expression for P0 - P(n-1) differs from the solve");
    });

    run_check(out, "principal_divisors_vanish", [&] {
        for (const auto& u : basis_full(ctx))
            for (const auto& c : class_coordinates(ctx, divisor_of(ctx, u)))
                if (c != 0)
                    return std::string("a basis divisor has a nonzero class");
        return std::string();
    });

    if (n >= 3)
        run_check(out, "basis_swap", [&] {
            const Integer ref = abs(det_integer(divisor_matrix(ctx, basis_full(ctx), Lattice::Full)));
            // Every position for small n, a spread sample beyond that.
            std::vector<std::size_t> positions;
            if (n <= 32)
                for (std::size_t i = 1; i + 2 <= n; ++i)
                    positions.push_back(i);
            else
                positions = {1, n / 2, n - 2};
            for (std::size_t i : positions) {
                const Integer d = abs(det_integer(divisor_matrix(ctx, basis_full_with_h0(ctx, i), Lattice::Full)));
                if (d != ref)
                    return "swapping H" + std::to_string(i) + " changes |det|";
            }
            return std::string();
        });

    return out;
}

} // namespace cuspgroup
