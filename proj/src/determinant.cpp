#include "cuspgroup/determinant.hpp"

#include "cuspgroup/number_theory.hpp"

#include <algorithm>
#include <limits>

namespace cuspgroup {

namespace {

constexpr std::size_t kBareissCutoff = 48;

void require_square(std::size_t rows, std::size_t cols)
{
    if (rows != cols)
        throw MathError(ErrorKind::NotSquare,
                        "matrix is " + std::to_string(rows) + "x" + std::to_string(cols));
}

} // namespace

Integer det_bareiss(const IntMatrix& input)
{
    require_square(input.rows(), input.cols());
    const std::size_t n = input.rows();
    if (n == 0)
        return 1;
    IntMatrix m = input;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m(swap, k) == 0)
                ++swap;
            if (swap == n)
                return 0;
            m.swap_rows(k, swap);
            sign = -sign;
        }
        const Integer& pivot = m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer& target = m(i, j);
                target = pivot * target - m(i, k) * m(k, j);
                mpz_divexact(target.get_mpz_t(), target.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, k) = 0;
        }
        prev = pivot;
    }
    Integer det = m(n - 1, n - 1);
    if (sign < 0)
        det = -det;
    return det;
}

Rational det_exact(const RatMatrix& a)
{
    require_square(a.rows(), a.cols());
    IntMatrix scaled(a.rows(), a.cols());
    Integer scale = 1;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const Integer row_lcm = lcm_of_denominators(a.row(i));
        scale *= row_lcm;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Rational& x = a(i, j);
            scaled(i, j) = x.get_num() * (row_lcm / x.get_den());
        }
    }
    return make_rational(det_integer(scaled), scale);
}

std::uint32_t det_mod_prime(std::vector<double>& entries, std::size_t n, std::uint32_t q, kernels::SubmulFn submul)
{
    const kernels::ModulusF64 mod(q);
    std::uint64_t det = 1;
    double* a = entries.data();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv * n + k] == 0.0)
            ++piv;
        if (piv == n)
            return 0;
        if (piv != k) {
            std::swap_ranges(a + piv * n + k, a + piv * n + n, a + k * n + k);
            det = (q - det) % q;
        }
        const auto pivot = static_cast<std::uint64_t>(a[k * n + k]);
        det = det * pivot % q;
        const std::uint64_t inv = invmod(pivot, q);
        const double* pivot_row = a + k * n + k;
        for (std::size_t i = k + 1; i < n; ++i) {
            double* row = a + i * n + k;
            if (row[0] == 0.0)
                continue;
            const auto factor = static_cast<double>(static_cast<std::uint64_t>(row[0]) * inv % q);
            submul(row, pivot_row, factor, n - k, mod);
        }
    }
    return static_cast<std::uint32_t>(det);
}

std::size_t hadamard_bound_bits(const IntMatrix& a)
{
    auto bound = [](const IntMatrix& m) {
        std::size_t bits = 0;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            Integer sq = 0;
            for (const auto& x : m.row(i))
                sq += x * x;
            if (sq == 0)
                return std::size_t{0};
            // sqrt(sq) < 2^ceil(bits(sq)/2)
            bits += (mpz_sizeinbase(sq.get_mpz_t(), 2) + 1) / 2;
        }
        return bits;
    };
    return std::min(bound(a), bound(a.transpose()));
}

Integer det_multimodular(const IntMatrix& a, kernels::Isa isa)
{
    require_square(a.rows(), a.cols());
    const std::size_t n = a.rows();
    if (n == 0)
        return 1;
    const kernels::SubmulFn submul = kernels::submul_kernel(isa);
    const std::size_t needed_bits = hadamard_bound_bits(a) + 2;

    bool fits_i64 = true;
    for (std::size_t i = 0; i < n && fits_i64; ++i)
        for (const auto& x : a.row(i))
            if (!x.fits_slong_p()) {
                fits_i64 = false;
                break;
            }
    std::vector<long> small;
    if (fits_i64) {
        small.reserve(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& x : a.row(i))
                small.push_back(x.get_si());
    }

    Integer residue = 0;
    Integer modulus = 1;
    std::vector<double> work(n * n);
    std::uint32_t q = kernels::kMaxKernelModulus;
    while (mpz_sizeinbase(modulus.get_mpz_t(), 2) <= needed_bits) {
        do {
            --q;
        } while (!is_prime(q));
        if (fits_i64) {
            const auto sq = static_cast<long>(q);
            for (std::size_t idx = 0; idx < n * n; ++idx) {
                long r = small[idx] % sq;
                work[idx] = static_cast<double>(r < 0 ? r + sq : r);
            }
        } else {
            std::size_t idx = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (const auto& x : a.row(i))
                    work[idx++] = static_cast<double>(mpz_fdiv_ui(x.get_mpz_t(), q));
        }
        const std::uint64_t r = det_mod_prime(work, n, q, submul);

        // residue <- residue + modulus * ((r - residue) / modulus mod q)
        const std::uint64_t current = mpz_fdiv_ui(residue.get_mpz_t(), q);
        const std::uint64_t mod_q = mpz_fdiv_ui(modulus.get_mpz_t(), q);
        const std::uint64_t diff = (r + q - current) % q;
        const std::uint64_t t = diff * invmod(mod_q, q) % q;
        residue += modulus * static_cast<unsigned long>(t);
        modulus *= static_cast<unsigned long>(q);
    }
    if (2 * residue > modulus)
        residue -= modulus;
    return residue;
}

Integer det_integer(const IntMatrix& a)
{
    require_square(a.rows(), a.cols());
    if (a.rows() <= kBareissCutoff)
        return det_bareiss(a);
    return det_multimodular(a);
}

} // namespace cuspgroup
