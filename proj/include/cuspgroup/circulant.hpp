#pragma once

#include "cuspgroup/matrix.hpp"

#include <span>

namespace cuspgroup {

// circ:  row i is c rotated left by i,  M[i][j] = c[(i + j) mod k].
// circa: row i is c rotated right by i, M[i][j] = c[(j - i) mod k].
// block: [[circ(c), J], [J, circ(c)]] with J the k x k matrix of `fill`.
enum class CirculantKind { Circ, Circa, Block };

/// Throws EmptyVector when c is empty.
RatMatrix build_circulant(std::span<const Rational> c, CirculantKind kind, const Rational& fill = Rational(0));

} // namespace cuspgroup
