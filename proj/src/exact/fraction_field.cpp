#include "kslice/exact/fraction_field.hpp"

#include "kslice/errors.hpp"

namespace kslice {

FunctionMatrix to_function_matrix(const Matrix<QLaurent>& m) {
  return m.map([](const QLaurent& p) { return RationalFunction(p); });
}

FunctionMatrix invert_over_fraction_field(const Matrix<QLaurent>& m) {
  if (!m.is_square()) throw std::invalid_argument("invert_over_fraction_field: non-square matrix");
  const std::size_t n = m.rows();
  FunctionMatrix a = to_function_matrix(m);
  FunctionMatrix inv = FunctionMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a(p, col).is_zero()) ++p;
    if (p == n) throw MathError("singular matrix");
    a.swap_rows(col, p);
    inv.swap_rows(col, p);
    const RationalFunction scale = a(col, col).inverse();
    a.scale_row(col, scale);
    inv.scale_row(col, scale);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col).is_zero()) continue;
      const RationalFunction f = -a(i, col);
      a.add_row_multiple(i, col, f);
      inv.add_row_multiple(i, col, f);
    }
  }
  return inv;
}

}  // namespace kslice
