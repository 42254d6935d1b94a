#include "cuspgroup/linear_solve.hpp"

namespace cuspgroup {

namespace {

// Reduces [A | B] in place to reduced row echelon form over the first
// `pivot_cols` columns and returns the pivot column of each pivot row.
std::vector<std::size_t> rref(RatMatrix& m, std::size_t pivot_cols)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    Rational factor;
    for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
        std::size_t pr = row;
        while (pr < m.rows() && m(pr, col) == 0)
            ++pr;
        if (pr == m.rows())
            continue;
        m.swap_rows(row, pr);
        const Rational inv = 1 / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j)
            m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0)
                continue;
            factor = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (m(row, j) != 0)
                    m(i, j) -= factor * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

AffineSolution solve_affine(const RatMatrix& a, std::span<const Rational> b)
{
    if (b.size() != a.rows())
        throw MathError(ErrorKind::DimensionMismatch, "right-hand side length differs from row count");
    const std::size_t m = a.rows(), k = a.cols();
    RatMatrix aug(m, k + 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            aug(i, j) = a(i, j);
        aug(i, k) = b[i];
    }
    const auto pivots = rref(aug, k);
    for (std::size_t i = pivots.size(); i < m; ++i)
        if (aug(i, k) != 0)
            throw MathError(ErrorKind::Inconsistent, "right-hand side is not in the column space");

    AffineSolution out;
    out.particular.assign(k, Rational(0));
    std::vector<bool> is_pivot(k, false);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        out.particular[pivots[r]] = aug(r, k);
        is_pivot[pivots[r]] = true;
    }
    for (std::size_t free = 0; free < k; ++free) {
        if (is_pivot[free])
            continue;
        RatVector v(k, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -aug(r, free);
        out.kernel_basis.push_back(std::move(v));
    }

    CUSPGROUP_ENSURE(a.apply(out.particular) == RatVector(b.begin(), b.end()), "A x != b");
    for (const auto& v : out.kernel_basis)
        CUSPGROUP_ENSURE(a.apply(v) == RatVector(m, Rational(0)), "kernel vector not annihilated");
    return out;
}

RatMatrix invert_matrix(const RatMatrix& a)
{
    if (!a.is_square())
        throw MathError(ErrorKind::NotSquare, "inverse of a non-square matrix");
    const std::size_t n = a.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = a(i, j);
        aug(i, n + i) = 1;
    }
    const auto pivots = rref(aug, n);
    if (pivots.size() != n)
        throw MathError(ErrorKind::Singular, "matrix is singular");
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = aug(i, n + j);
    CUSPGROUP_ENSURE(a * inv == RatMatrix::identity(n), "A * inverse != I");
    return inv;
}

} // namespace cuspgroup
