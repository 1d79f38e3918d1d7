#pragma once

#include "kslice/exact/laurent.hpp"
#include "kslice/exact/matrix.hpp"

namespace kslice {

/// Sylvester matrix of f (degree m) and g (degree n): the first n rows carry
/// the coefficients of f from the leading one down, shifted one column per
/// row, followed by m rows for g.  Powers of t are cleared first.
IntegerMatrix sylvester_matrix(const IntLaurent& f, const IntLaurent& g);

/// Res(f, g) = det(sylvester_matrix(f, g)).  With this row order
/// Res(f, g) = lc(f)^deg(g) * prod g(roots of f), so Res(f, c) = c^deg(f).
/// Throws MathError("undefined resultant") on a zero argument.
Integer resultant(const IntLaurent& f, const IntLaurent& g);

}  // namespace kslice
