#pragma once

#include "kslice/exact/matrix.hpp"
#include "kslice/exact/rational_function.hpp"

namespace kslice {

using FunctionMatrix = Matrix<RationalFunction>;

FunctionMatrix to_function_matrix(const Matrix<QLaurent>& m);

/// Inverse over Q(t) by Gauss-Jordan elimination with entries kept in lowest
/// terms.  Throws MathError("singular matrix") when det m = 0.
FunctionMatrix invert_over_fraction_field(const Matrix<QLaurent>& m);

}  // namespace kslice
