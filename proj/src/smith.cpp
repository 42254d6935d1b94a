#include "cuspgroup/smith.hpp"

#include "cuspgroup/determinant.hpp"

#include <algorithm>

namespace cuspgroup {

namespace {

// ---- exact SNF with transforms -------------------------------------------

struct ExactSmith {
    IntMatrix S, U, V;

    explicit ExactSmith(const IntMatrix& a) : S(a), U(IntMatrix::identity(a.rows())), V(IntMatrix::identity(a.cols())) {}

    // row_i += c * row_j
    void add_row(std::size_t i, std::size_t j, const Integer& c)
    {
        for (std::size_t col = 0; col < S.cols(); ++col)
            S(i, col) += c * S(j, col);
        for (std::size_t r = 0; r < U.rows(); ++r)
            U(r, j) -= c * U(r, i);
    }

    // col_j += c * col_i
    void add_col(std::size_t j, std::size_t i, const Integer& c)
    {
        for (std::size_t r = 0; r < S.rows(); ++r)
            S(r, j) += c * S(r, i);
        for (std::size_t col = 0; col < V.cols(); ++col)
            V(i, col) -= c * V(j, col);
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        S.swap_rows(a, b);
        U.swap_cols(a, b);
    }

    void swap_cols(std::size_t a, std::size_t b)
    {
        S.swap_cols(a, b);
        V.swap_rows(a, b);
    }

    void negate_row(std::size_t i)
    {
        for (auto& x : S.row(i))
            x = -x;
        for (std::size_t r = 0; r < U.rows(); ++r)
            U(r, i) = -U(r, i);
    }

    bool find_min_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const
    {
        bool found = false;
        Integer best;
        for (std::size_t i = t; i < S.rows(); ++i)
            for (std::size_t j = t; j < S.cols(); ++j) {
                const Integer& x = S(i, j);
                if (x == 0)
                    continue;
                if (!found || mpz_cmpabs(x.get_mpz_t(), best.get_mpz_t()) < 0) {
                    best = abs(x);
                    pi = i;
                    pj = j;
                    found = true;
                    if (best == 1)
                        return true;
                }
            }
        return found;
    }

    void run()
    {
        const std::size_t m = S.rows(), k = S.cols();
        Integer q;
        for (std::size_t t = 0; t < std::min(m, k); ++t) {
            for (;;) {
                std::size_t pi = 0, pj = 0;
                if (!find_min_pivot(t, pi, pj))
                    return;
                swap_rows(t, pi);
                swap_cols(t, pj);
                bool clear = true;
                for (std::size_t i = t + 1; i < m; ++i) {
                    if (S(i, t) == 0)
                        continue;
                    mpz_tdiv_q(q.get_mpz_t(), S(i, t).get_mpz_t(), S(t, t).get_mpz_t());
                    add_row(i, t, -q);
                    if (S(i, t) != 0)
                        clear = false;
                }
                for (std::size_t j = t + 1; j < k; ++j) {
                    if (S(t, j) == 0)
                        continue;
                    mpz_tdiv_q(q.get_mpz_t(), S(t, j).get_mpz_t(), S(t, t).get_mpz_t());
                    add_col(j, t, -q);
                    if (S(t, j) != 0)
                        clear = false;
                }
                if (!clear)
                    continue;
                bool divisible = true;
                for (std::size_t i = t + 1; i < m && divisible; ++i)
                    for (std::size_t j = t + 1; j < k; ++j)
                        if (!mpz_divisible_p(S(i, j).get_mpz_t(), S(t, t).get_mpz_t())) {
                            add_row(t, i, 1);
                            divisible = false;
                            break;
                        }
                if (divisible)
                    break;
            }
            if (S(t, t) < 0)
                negate_row(t);
        }
    }
};

// ---- cokernel modulo M ----------------------------------------------------

struct ModularSmith {
    IntMatrix B;
    std::optional<IntMatrix> W;
    Integer M;
    Integer tmp;

    ModularSmith(const IntMatrix& a, const Integer& modulus, bool track) : B(a), M(modulus)
    {
        for (std::size_t i = 0; i < B.rows(); ++i)
            for (auto& x : B.row(i))
                mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), M.get_mpz_t());
        if (track)
            W = IntMatrix::identity(a.rows());
    }

    void reduce(Integer& x) { mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), M.get_mpz_t()); }

    // row_i -= c * row_j over columns >= from
    void submul_row(std::size_t i, std::size_t j, const Integer& c, std::size_t from)
    {
        for (std::size_t col = from; col < B.cols(); ++col) {
            if (B(j, col) == 0)
                continue;
            mpz_submul(B(i, col).get_mpz_t(), c.get_mpz_t(), B(j, col).get_mpz_t());
            reduce(B(i, col));
        }
        if (W) {
            for (std::size_t col = 0; col < W->cols(); ++col) {
                if ((*W)(j, col) == 0)
                    continue;
                mpz_submul((*W)(i, col).get_mpz_t(), c.get_mpz_t(), (*W)(j, col).get_mpz_t());
                reduce((*W)(i, col));
            }
        }
    }

    // (row_r, row_i) <- (s row_r + t row_i, -v row_r + u row_i), su + tv = 1
    static void mix(std::span<Integer> x, std::span<Integer> y, const Integer& s, const Integer& t, const Integer& u,
                    const Integer& v, const Integer& M, std::size_t from)
    {
        Integer nx, ny;
        for (std::size_t c = from; c < x.size(); ++c) {
            if (x[c] == 0 && y[c] == 0)
                continue;
            nx = s * x[c] + t * y[c];
            ny = u * y[c] - v * x[c];
            mpz_fdiv_r(x[c].get_mpz_t(), nx.get_mpz_t(), M.get_mpz_t());
            mpz_fdiv_r(y[c].get_mpz_t(), ny.get_mpz_t(), M.get_mpz_t());
        }
    }

    void mix_rows(std::size_t r, std::size_t i, const Integer& s, const Integer& t, const Integer& u, const Integer& v)
    {
        mix(B.row(r), B.row(i), s, t, u, v, M, r);
        if (W)
            mix(W->row(r), W->row(i), s, t, u, v, M, 0);
    }

    void mix_cols(std::size_t r, std::size_t j, const Integer& s, const Integer& t, const Integer& u, const Integer& v)
    {
        Integer nx, ny;
        for (std::size_t row = r; row < B.rows(); ++row) {
            Integer& x = B(row, r);
            Integer& y = B(row, j);
            if (x == 0 && y == 0)
                continue;
            nx = s * x + t * y;
            ny = u * y - v * x;
            mpz_fdiv_r(x.get_mpz_t(), nx.get_mpz_t(), M.get_mpz_t());
            mpz_fdiv_r(y.get_mpz_t(), ny.get_mpz_t(), M.get_mpz_t());
        }
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        B.swap_rows(a, b);
        if (W)
            W->swap_rows(a, b);
    }

    void scale_row(std::size_t r, const Integer& unit)
    {
        for (std::size_t c = r; c < B.cols(); ++c) {
            B(r, c) *= unit;
            reduce(B(r, c));
        }
        if (W)
            for (auto& x : W->row(r)) {
                x *= unit;
                reduce(x);
            }
    }

    // Prefers a unit; otherwise the entry with the smallest gcd with M.
    bool find_pivot(std::size_t r, std::size_t& pi, std::size_t& pj)
    {
        bool found = false;
        Integer best, g;
        for (std::size_t j = r; j < B.cols(); ++j)
            for (std::size_t i = r; i < B.rows(); ++i) {
                const Integer& x = B(i, j);
                if (x == 0)
                    continue;
                mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), M.get_mpz_t());
                if (!found || g < best) {
                    best = g;
                    pi = i;
                    pj = j;
                    found = true;
                    if (best == 1)
                        return true;
                }
            }
        return found;
    }

    // Clears column r below and row r right of the pivot with extended-gcd
    // moves; returns once both are zero.
    void clear_cross(std::size_t r)
    {
        Integer g, s, t, u, v, q;
        const std::size_t m = B.rows(), k = B.cols();
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (B(i, r) == 0)
                    continue;
                if (B(r, r) == 0) {
                    swap_rows(r, i);
                    continue;
                }
                if (mpz_divisible_p(B(i, r).get_mpz_t(), B(r, r).get_mpz_t())) {
                    mpz_divexact(q.get_mpz_t(), B(i, r).get_mpz_t(), B(r, r).get_mpz_t());
                    submul_row(i, r, q, r);
                    continue;
                }
                mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), B(r, r).get_mpz_t(), B(i, r).get_mpz_t());
                mpz_divexact(u.get_mpz_t(), B(r, r).get_mpz_t(), g.get_mpz_t());
                mpz_divexact(v.get_mpz_t(), B(i, r).get_mpz_t(), g.get_mpz_t());
                mix_rows(r, i, s, t, u, v);
            }
            for (std::size_t j = r + 1; j < k; ++j) {
                if (B(r, j) == 0)
                    continue;
                if (B(r, r) != 0 && mpz_divisible_p(B(r, j).get_mpz_t(), B(r, r).get_mpz_t())) {
                    // col_j -= q col_r; column r is zero below the pivot here
                    // unless an earlier gcd move dirtied it.
                    mpz_divexact(q.get_mpz_t(), B(r, j).get_mpz_t(), B(r, r).get_mpz_t());
                    for (std::size_t row = r; row < m; ++row) {
                        if (B(row, r) == 0)
                            continue;
                        mpz_submul(B(row, j).get_mpz_t(), q.get_mpz_t(), B(row, r).get_mpz_t());
                        reduce(B(row, j));
                    }
                    continue;
                }
                if (B(r, r) == 0) {
                    // swap columns r and j
                    for (std::size_t row = 0; row < m; ++row)
                        std::swap(B(row, r), B(row, j));
                    dirty = true;
                    continue;
                }
                mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), B(r, r).get_mpz_t(), B(r, j).get_mpz_t());
                mpz_divexact(u.get_mpz_t(), B(r, r).get_mpz_t(), g.get_mpz_t());
                mpz_divexact(v.get_mpz_t(), B(r, j).get_mpz_t(), g.get_mpz_t());
                mix_cols(r, j, s, t, u, v);
                dirty = true;
            }
            if (dirty) {
                dirty = false;
                for (std::size_t i = r + 1; i < m; ++i)
                    if (B(i, r) != 0) {
                        dirty = true;
                        break;
                    }
            }
        }
    }

    IntVector run()
    {
        const std::size_t m = B.rows(), k = B.cols();
        IntVector diag(m, M);
        Integer g, inv;
        for (std::size_t r = 0; r < std::min(m, k); ++r) {
            std::size_t pi = 0, pj = 0;
            if (!find_pivot(r, pi, pj))
                break; // rest is zero mod M
            swap_rows(r, pi);
            if (pj != r)
                for (std::size_t row = 0; row < m; ++row)
                    std::swap(B(row, r), B(row, pj));

            mpz_gcd(g.get_mpz_t(), B(r, r).get_mpz_t(), M.get_mpz_t());
            if (g == 1) {
                mpz_invert(inv.get_mpz_t(), B(r, r).get_mpz_t(), M.get_mpz_t());
                scale_row(r, inv);
                for (std::size_t i = r + 1; i < m; ++i) {
                    if (B(i, r) == 0)
                        continue;
                    const Integer c = B(i, r);
                    submul_row(i, r, c, r);
                }
                for (std::size_t j = r + 1; j < k; ++j)
                    B(r, j) = 0; // column ops against the isolated pivot
                diag[r] = 1;
                continue;
            }

            for (;;) {
                clear_cross(r);
                // Fold M in through a virtual column M e_r.
                mpz_gcd(g.get_mpz_t(), B(r, r).get_mpz_t(), M.get_mpz_t());
                B(r, r) = g;
                if (g == M) {
                    B(r, r) = 0;
                    break;
                }
                bool divisible = true;
                for (std::size_t i = r + 1; i < m && divisible; ++i)
                    for (std::size_t j = r + 1; j < k; ++j)
                        if (!mpz_divisible_p(B(i, j).get_mpz_t(), g.get_mpz_t())) {
                            submul_row(r, i, Integer(-1), r);
                            divisible = false;
                            break;
                        }
                if (divisible)
                    break;
            }
            diag[r] = g;
        }
        return diag;
    }
};


// Left-looking elimination mod M restricted to unit pivots. Each entry of
// the factors is one accumulated dot product followed by a single reduction.
// Stops at the first step where no column of the active block has a unit.
struct UnitPhase {
    const IntMatrix& A;
    Integer M;
    std::size_t m, k_cols, steps = 0;
    std::vector<std::size_t> row_perm, col_perm;
    std::vector<IntVector> lower; // lower[i][t], t < min(i + 1, steps)
    std::vector<IntVector> upper; // upper[j][t], t < steps, unit diagonal

    UnitPhase(const IntMatrix& a, const Integer& modulus)
        : A(a), M(modulus), m(a.rows()), k_cols(a.cols()), row_perm(m), col_perm(k_cols), lower(m), upper(k_cols)
    {
        for (std::size_t i = 0; i < m; ++i)
            row_perm[i] = i;
        for (std::size_t j = 0; j < k_cols; ++j)
            col_perm[j] = j;
    }

    // Schur complement entry at active position (i, j) after `steps` pivots.
    void schur_entry(std::size_t i, std::size_t j, Integer& acc) const
    {
        acc = A(row_perm[i], col_perm[j]);
        const IntVector& l = lower[i];
        const IntVector& u = upper[j];
        for (std::size_t t = 0; t < steps; ++t)
            mpz_submul(acc.get_mpz_t(), l[t].get_mpz_t(), u[t].get_mpz_t());
        mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), M.get_mpz_t());
    }

    // Fills column j of the Schur complement for rows >= steps; returns the
    // first row holding a unit, or m.
    std::size_t schur_column(std::size_t j, IntVector& col) const
    {
        const std::size_t r = steps;
        col.resize(m - r);
        std::size_t found = m;
        Integer g;
        for (std::size_t i = r; i < m; ++i) {
            schur_entry(i, j, col[i - r]);
            if (found == m && col[i - r] != 0) {
                mpz_gcd(g.get_mpz_t(), col[i - r].get_mpz_t(), M.get_mpz_t());
                if (g == 1)
                    found = i;
            }
        }
        return found;
    }

    void run()
    {
        IntVector col;
        Integer inv, acc;
        while (steps < std::min(m, k_cols)) {
            const std::size_t r = steps;
            std::size_t pivot_row = m, pivot_col = r;
            for (; pivot_col < k_cols; ++pivot_col) {
                pivot_row = schur_column(pivot_col, col);
                if (pivot_row != m)
                    break;
            }
            if (pivot_row == m)
                return;
            std::swap(col_perm[r], col_perm[pivot_col]);
            std::swap(upper[r], upper[pivot_col]);
            std::swap(row_perm[r], row_perm[pivot_row]);
            std::swap(lower[r], lower[pivot_row]);
            std::swap(col[0], col[pivot_row - r]);
            for (std::size_t i = r; i < m; ++i)
                lower[i].push_back(std::move(col[i - r]));
            mpz_invert(inv.get_mpz_t(), lower[r][r].get_mpz_t(), M.get_mpz_t());
            upper[r].push_back(Integer(1));
            for (std::size_t j = r + 1; j < k_cols; ++j) {
                schur_entry(r, j, acc);
                acc *= inv;
                mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), M.get_mpz_t());
                upper[j].push_back(acc);
            }
            ++steps;
        }
    }

    IntMatrix remaining_block() const
    {
        IntMatrix s(m - steps, k_cols - steps);
        for (std::size_t i = steps; i < m; ++i)
            for (std::size_t j = steps; j < k_cols; ++j)
                schur_entry(i, j, s(i - steps, j - steps));
        return s;
    }
};

} // namespace

SnfResult smith_normal_form(const IntMatrix& a)
{
    ExactSmith work(a);
    work.run();
    SnfResult out{std::move(work.U), std::move(work.S), std::move(work.V), {}};
    for (std::size_t i = 0; i < std::min(out.S.rows(), out.S.cols()); ++i)
        if (out.S(i, i) != 0)
            out.invariant_factors.push_back(out.S(i, i));
    return out;
}

SnfResult smith_normal_form(const RatMatrix& a) { return smith_normal_form(to_integer(a)); }

void verify_snf(const IntMatrix& a, const SnfResult& snf)
{
    CUSPGROUP_ENSURE(snf.U * snf.S * snf.V == a, "A != U S V");
    CUSPGROUP_ENSURE(abs(det_bareiss(snf.U)) == 1, "U is not unimodular");
    CUSPGROUP_ENSURE(abs(det_bareiss(snf.V)) == 1, "V is not unimodular");
    const std::size_t r = std::min(snf.S.rows(), snf.S.cols());
    for (std::size_t i = 0; i < snf.S.rows(); ++i)
        for (std::size_t j = 0; j < snf.S.cols(); ++j)
            if (i != j)
                CUSPGROUP_ENSURE(snf.S(i, j) == 0, "S is not diagonal");
    bool seen_zero = false;
    for (std::size_t i = 0; i < r; ++i) {
        const Integer& d = snf.S(i, i);
        CUSPGROUP_ENSURE(d >= 0, "negative diagonal entry");
        if (d == 0) {
            seen_zero = true;
            continue;
        }
        CUSPGROUP_ENSURE(!seen_zero, "zero before nonzero on the diagonal");
        if (i > 0)
            CUSPGROUP_ENSURE(mpz_divisible_p(d.get_mpz_t(), snf.S(i - 1, i - 1).get_mpz_t()) != 0,
                             "diagonal is not a divisibility chain");
    }
}

Cokernel Cokernel::compute(const IntMatrix& a, const Integer& modulus, bool track_left)
{
    CUSPGROUP_ENSURE(modulus > 0, "cokernel modulus must be positive");
    Cokernel out;
    out.modulus_ = modulus;
    const std::size_t m = a.rows();

    UnitPhase unit(a, modulus);
    if (modulus > 1)
        unit.run();
    const std::size_t steps = unit.steps;

    ModularSmith tail(unit.remaining_block(), modulus, track_left);
    out.diagonal_.assign(steps, Integer(1));
    for (auto& d : tail.run())
        out.diagonal_.push_back(std::move(d));
    CUSPGROUP_ENSURE(out.diagonal_.size() == m, "cokernel diagonal has the wrong length");

    if (track_left) {
        Transform t;
        t.row_perm = std::move(unit.row_perm);
        t.lower = std::move(unit.lower);
        t.steps = steps;
        t.tail_left = std::move(*tail.W);
        out.left_ = std::move(t);
    }
    for (std::size_t i = 1; i < out.diagonal_.size(); ++i)
        CUSPGROUP_ENSURE(mpz_divisible_p(out.diagonal_[i].get_mpz_t(), out.diagonal_[i - 1].get_mpz_t()) != 0,
                         "cokernel diagonal is not a divisibility chain");
    return out;
}

IntVector Cokernel::invariant_factors() const
{
    IntVector out;
    for (const auto& d : diagonal_)
        if (d > 1)
            out.push_back(d);
    return out;
}

Integer Cokernel::order() const
{
    Integer prod = 1;
    for (const auto& d : diagonal_)
        prod *= d;
    return prod;
}

IntVector Cokernel::coordinates(std::span<const Integer> x) const
{
    CUSPGROUP_ENSURE(left_.has_value(), "cokernel built without a left transform");
    const Transform& t = *left_;
    const std::size_t m = t.row_perm.size();
    if (x.size() != m)
        throw MathError(ErrorKind::DimensionMismatch, "coordinate vector has the wrong length");

    // Undo the unit-pivot factor: y = L^{-1} P x.
    IntVector y(m);
    for (std::size_t i = 0; i < m; ++i)
        y[i] = mod_floor(x[t.row_perm[i]], modulus_);
    Integer inv;
    for (std::size_t i = 0; i < m; ++i) {
        const IntVector& l = t.lower[i];
        const std::size_t upto = std::min(i, t.steps);
        for (std::size_t s = 0; s < upto; ++s)
            mpz_submul(y[i].get_mpz_t(), l[s].get_mpz_t(), y[s].get_mpz_t());
        if (i < t.steps) {
            mpz_invert(inv.get_mpz_t(), l[i].get_mpz_t(), modulus_.get_mpz_t());
            y[i] *= inv;
        }
        y[i] = mod_floor(y[i], modulus_);
    }

    IntVector out;
    Integer acc;
    for (std::size_t i = t.steps; i < m; ++i) {
        const Integer& d = diagonal_[i];
        if (d == 1)
            continue;
        acc = 0;
        for (std::size_t j = t.steps; j < m; ++j)
            acc += t.tail_left(i - t.steps, j - t.steps) * y[j];
        out.push_back(mod_floor(acc, d));
    }
    return out;
}

} // namespace cuspgroup
