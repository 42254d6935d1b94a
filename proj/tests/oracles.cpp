#include "oracles.hpp"

#include <numeric>
#include <stdexcept>

namespace cuspgroup::oracle {

std::uint64_t multiplicative_order(std::uint64_t g, std::uint64_t p)
{
    std::uint64_t x = g % p, k = 1;
    while (x != 1) {
        x = x * g % p;
        ++k;
    }
    return k;
}

bool is_prime_naive(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<Rational> bernoulli_vector(std::uint64_t p, std::uint64_t alpha)
{
    const std::uint64_t n = (p - 1) / 2;
    std::vector<Rational> out;
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
        Rational y(static_cast<unsigned long>(r), static_cast<unsigned long>(p));
        y.canonicalize();
        Rational b = y * y - y + Rational(1, 6);
        b.canonicalize();
        out.push_back(Rational(static_cast<unsigned long>(p), 2) * b);
        out.back().canonicalize();
        r = r * alpha % p;
    }
    return out;
}

Rational det_gauss(const RatMatrix& input)
{
    RatMatrix a = input;
    const std::size_t n = a.rows();
    Rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a(piv, k) == 0)
            ++piv;
        if (piv == n)
            return 0;
        if (piv != k) {
            a.swap_rows(piv, k);
            det = -det;
        }
        det *= a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const Rational f = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j)
                a(i, j) -= f * a(k, j);
        }
    }
    return det;
}

std::vector<Rational> solve_gauss(const RatMatrix& input, const std::vector<Rational>& rhs)
{
    RatMatrix a = input;
    std::vector<Rational> b = rhs;
    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a(piv, k) == 0)
            ++piv;
        if (piv == n)
            throw std::runtime_error("singular");
        a.swap_rows(piv, k);
        std::swap(b[piv], b[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            const Rational f = a(i, k) / a(k, k);
            if (f == 0)
                continue;
            for (std::size_t j = k; j < n; ++j)
                a(i, j) -= f * a(k, j);
            b[i] -= f * b[k];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t k = n; k-- > 0;) {
        Rational s = b[k];
        for (std::size_t j = k + 1; j < n; ++j)
            s -= a(k, j) * x[j];
        x[k] = s / a(k, k);
    }
    return x;
}

namespace {

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out)
{
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Integer> invariant_factors_by_minors(const IntMatrix& a)
{
    const std::size_t r = std::min(a.rows(), a.cols());
    std::vector<Integer> divisors{1}; // determinantal divisors d_0 = 1, d_1, ...
    for (std::size_t k = 1; k <= r; ++k) {
        std::vector<std::vector<std::size_t>> rows, cols;
        std::vector<std::size_t> cur;
        subsets(a.rows(), k, 0, cur, rows);
        subsets(a.cols(), k, 0, cur, cols);
        Integer g = 0;
        for (const auto& rs : rows)
            for (const auto& cs : cols) {
                RatMatrix m(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        m(i, j) = a(rs[i], cs[j]);
                const Rational d = det_gauss(m);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_num_mpz_t());
            }
        if (g == 0)
            break;
        divisors.push_back(g);
    }
    std::vector<Integer> out;
    for (std::size_t k = 1; k < divisors.size(); ++k) {
        const Integer f = divisors[k] / divisors[k - 1];
        if (f > 1)
            out.push_back(f);
    }
    return out;
}

Integer cokernel_element_order(const IntMatrix& a, const std::vector<Integer>& x)
{
    RatMatrix ra(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            ra(i, j) = a(i, j);
    std::vector<Rational> rx(x.begin(), x.end());
    Integer l = 1;
    for (const auto& v : solve_gauss(ra, rx))
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    return l;
}

RawDivisor divisor_unreduced(std::uint64_t p, std::uint64_t alpha, const std::vector<Rational>& e,
                             const std::vector<Rational>& f)
{
    const std::size_t n = e.size();
    auto a_raw = [&](std::size_t k) {
        std::uint64_t r = 1;
        for (std::size_t t = 0; t < k; ++t)
            r = r * alpha % p;
        Rational y(static_cast<unsigned long>(r), static_cast<unsigned long>(p));
        y.canonicalize();
        Rational v = Rational(static_cast<unsigned long>(p), 2) * (y * y - y + Rational(1, 6));
        v.canonicalize();
        return v;
    };
    Rational se = 0, sf = 0;
    for (std::size_t j = 0; j < n; ++j) {
        se += e[j];
        sf += f[j];
    }
    RawDivisor d{std::vector<Rational>(n), std::vector<Rational>(n)};
    for (std::size_t i = 0; i < n; ++i) {
        d.p[i] = sf / 12;
        d.q[i] = se / 12;
        for (std::size_t j = 0; j < n; ++j) {
            const Rational a = a_raw(i + j);
            d.p[i] += e[j] * a;
            d.q[i] += f[j] * a;
        }
    }
    return d;
}

} // namespace cuspgroup::oracle
