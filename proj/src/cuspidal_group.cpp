#include "cuspgroup/cuspidal_group.hpp"

#include "cuspgroup/circulant.hpp"
#include "cuspgroup/determinant.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

namespace cuspgroup {

namespace {

std::size_t lattice_rank(const CurveContext& ctx, Lattice lattice)
{
    return lattice == Lattice::Full ? 2 * ctx.n() - 1 : ctx.n() - 1;
}

std::vector<UnitExponents> standard_basis(const CurveContext& ctx, Lattice lattice)
{
    return lattice == Lattice::Full ? basis_full(ctx) : basis_infty(ctx);
}

Integer abs_det(const IntMatrix& m) { return abs(det_integer(m)); }

AbelianGroupStructure structure_of(const Cokernel& c)
{
    AbelianGroupStructure g;
    g.invariant_factors = c.invariant_factors();
    g.order = c.order();
    return g;
}

using CacheKey = std::tuple<std::uint64_t, std::uint64_t, Lattice>;

struct GroupCache {
    std::shared_mutex mutex;
    std::map<CacheKey, std::shared_ptr<const Cokernel>> entries;
};

GroupCache& cache()
{
    static GroupCache instance;
    return instance;
}

} // namespace

IntVector lattice_coordinates(const CurveContext& ctx, const CuspDivisor& d, Lattice lattice)
{
    const std::size_t n = ctx.n();
    if (d.p.size() != n || d.q.size() != n)
        throw MathError(ErrorKind::DimensionMismatch, "divisor has the wrong number of cusps");
    if (!d.is_integral())
        throw MathError(ErrorKind::NonIntegerEntry, "divisor has a non-integral coefficient");
    if (d.degree() != 0)
        throw MathError(ErrorKind::NotDegreeZero, "divisor has nonzero degree");
    IntVector x;
    x.reserve(lattice_rank(ctx, lattice));
    if (lattice == Lattice::Full) {
        for (std::size_t i = 0; i < n; ++i)
            x.push_back(d.p[i].get_num());
        for (std::size_t j = 0; j + 1 < n; ++j)
            x.push_back(d.q[j].get_num());
        return x;
    }
    for (const auto& c : d.q)
        if (c != 0)
            throw MathError(ErrorKind::WrongLattice, "divisor is not supported on the P cusps");
    for (std::size_t i = 0; i + 1 < n; ++i)
        x.push_back(d.p[i].get_num());
    return x;
}

IntMatrix divisor_matrix(const CurveContext& ctx, const std::vector<UnitExponents>& units, Lattice lattice)
{
    const std::size_t rank = lattice_rank(ctx, lattice);
    IntMatrix m(rank, units.size());
    for (std::size_t col = 0; col < units.size(); ++col) {
        const auto& u = units[col];
        const bool valid = lattice == Lattice::Full ? u.is_integral() && check_unit(ctx, u) : check_infty_unit(ctx, u);
        if (!valid)
            throw MathError(ErrorKind::WrongLattice, "exponent vector " + std::to_string(col) +
                                                         " is not a unit for this lattice");
        const auto d = divisor_of(ctx, u);
        CUSPGROUP_ENSURE(d.is_integral() && d.degree() == 0, "unit divisor is not integral of degree 0");
        const auto x = lattice_coordinates(ctx, d, lattice);
        for (std::size_t r = 0; r < rank; ++r)
            m(r, col) = x[r];
    }
    return m;
}

Integer class_number(const CurveContext& ctx, ClassNumberMethod method)
{
    if (method == ClassNumberMethod::Snf)
        return abs_det(divisor_matrix(ctx, basis_full(ctx), Lattice::Full));

    RatVector shifted(ctx.a().begin(), ctx.a().end());
    for (auto& x : shifted)
        x -= make_rational(1, 12);
    const Rational det_c = det_exact(build_circulant(shifted, CirculantKind::Circ));
    const Rational root = Rational(6 * Integer(static_cast<unsigned long>(ctx.p()))) * det_c /
                          Rational(Integer(static_cast<unsigned long>(ctx.n())));
    if (!is_integral(root))
        throw InvariantError("circulant class number is not an integer square");
    return root.get_num() * root.get_num();
}

std::shared_ptr<const Cokernel> cuspidal_cokernel(const CurveContext& ctx, Lattice lattice, bool with_coordinates)
{
    const CacheKey key{ctx.p(), ctx.alpha(), lattice};
    auto& c = cache();
    {
        std::shared_lock lock(c.mutex);
        auto it = c.entries.find(key);
        if (it != c.entries.end() && (!with_coordinates || it->second->has_left_transform()))
            return it->second;
    }
    const IntMatrix m = divisor_matrix(ctx, standard_basis(ctx, lattice), lattice);
    const Integer det = abs_det(m);
    CUSPGROUP_ENSURE(det != 0, "divisor matrix is singular");
    auto computed = std::make_shared<const Cokernel>(Cokernel::compute(m, det, with_coordinates));
    CUSPGROUP_ENSURE(computed->order() == det, "product of invariant factors differs from |det|");

    std::unique_lock lock(c.mutex);
    auto& slot = c.entries[key];
    if (!slot || (computed->has_left_transform() && !slot->has_left_transform()))
        slot = computed;
    return slot;
}

void clear_group_cache()
{
    auto& c = cache();
    std::unique_lock lock(c.mutex);
    c.entries.clear();
}

AbelianGroupStructure group_structure(const CurveContext& ctx)
{
    return structure_of(*cuspidal_cokernel(ctx, Lattice::Full, false));
}

AbelianGroupStructure rational_group_structure(const CurveContext& ctx)
{
    return structure_of(*cuspidal_cokernel(ctx, Lattice::Infty, false));
}

IntVector class_coordinates(const CurveContext& ctx, const CuspDivisor& d)
{
    const auto x = lattice_coordinates(ctx, d, Lattice::Full);
    return cuspidal_cokernel(ctx, Lattice::Full, true)->coordinates(x);
}

Integer order_in_group(const CurveContext& ctx, const CuspDivisor& d)
{
    const auto coords = class_coordinates(ctx, d);
    const auto factors = cuspidal_cokernel(ctx, Lattice::Full, true)->invariant_factors();
    Integer order = 1;
    for (std::size_t i = 0; i < factors.size(); ++i)
        order = lcm(order, factors[i] / gcd(factors[i], coords[i]));
    return order;
}

GenerationReport verify_generating_set(const CurveContext& ctx, const std::vector<CuspDivisor>& divisors)
{
    const auto coker = cuspidal_cokernel(ctx, Lattice::Full, true);
    const auto factors = coker->invariant_factors();
    const std::size_t r = factors.size();

    GenerationReport report;
    report.group_order = coker->order();

    // Relations diag(d) next to the generator coordinates; the cokernel of
    // this r x (r + k) matrix is the quotient of the group by the subgroup.
    IntMatrix rel(r, r + divisors.size());
    for (std::size_t i = 0; i < r; ++i)
        rel(i, i) = factors[i];
    Integer product = 1;
    for (std::size_t k = 0; k < divisors.size(); ++k) {
        const auto coords = coker->coordinates(lattice_coordinates(ctx, divisors[k], Lattice::Full));
        Integer order = 1;
        for (std::size_t i = 0; i < r; ++i) {
            rel(i, r + k) = coords[i];
            order = lcm(order, factors[i] / gcd(factors[i], coords[i]));
        }
        report.orders.push_back(order);
        product *= order;
    }
    const Integer index = r == 0 ? Integer(1) : Cokernel::compute(rel, report.group_order, false).order();
    report.subgroup_order = report.group_order / index;
    report.generates = index == 1;
    report.direct = product == report.subgroup_order;
    return report;
}

} // namespace cuspgroup
