#pragma once

#include <span>
#include <vector>

#include "kslice/exact/matrix.hpp"

namespace kslice {

/// Reduced row echelon form with zero rows dropped.  Two matrices have the
/// same row space iff their row_basis results are equal.
RationalMatrix row_basis(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Basis (as rows) of {x : m * x = 0}, in reduced row echelon form.
RationalMatrix nullspace(const RationalMatrix& m);

/// Exact inverse; throws MathError("singular matrix") when det = 0.
RationalMatrix inverse(const RationalMatrix& m);

/// Whether v lies in the row space of basis.
bool in_row_space(const RationalMatrix& basis, std::span<const Rational> v);

/// Rows of a stacked on top of rows of b.
RationalMatrix stack_rows(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace kslice
