#include "cuspgroup/matrix.hpp"

namespace cuspgroup {

RatMatrix to_rational(const IntMatrix& m)
{
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = Rational(m(i, j));
    return out;
}

IntMatrix to_integer(const RatMatrix& m)
{
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& x = m(i, j);
            if (!is_integral(x))
                throw MathError(ErrorKind::NonIntegerEntry,
                                "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + to_string(x));
            out(i, j) = x.get_num();
        }
    return out;
}

bool is_integral(const RatMatrix& m)
{
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!is_integral(m(i, j)))
                return false;
    return true;
}

} // namespace cuspgroup
