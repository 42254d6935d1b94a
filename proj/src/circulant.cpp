#include "cuspgroup/circulant.hpp"

namespace cuspgroup {

RatMatrix build_circulant(std::span<const Rational> c, CirculantKind kind, const Rational& fill)
{
    if (c.empty())
        throw MathError(ErrorKind::EmptyVector, "circulant of an empty vector");
    const std::size_t k = c.size();
    switch (kind) {
    case CirculantKind::Circ: {
        RatMatrix m(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                m(i, j) = c[(i + j) % k];
        return m;
    }
    case CirculantKind::Circa: {
        RatMatrix m(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                m(i, j) = c[(j + k - i) % k];
        return m;
    }
    case CirculantKind::Block: {
        RatMatrix m(2 * k, 2 * k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                m(i, j) = m(k + i, k + j) = c[(i + j) % k];
                m(i, k + j) = m(k + i, j) = fill;
            }
        return m;
    }
    }
    invariant_failed("kind", __FILE__, __LINE__, "unknown circulant kind");
}

} // namespace cuspgroup
