#include "kslice/exact/resultant.hpp"

#include "kslice/errors.hpp"
#include "kslice/exact/determinant.hpp"

namespace kslice {

IntegerMatrix sylvester_matrix(const IntLaurent& f, const IntLaurent& g) {
  if (f.is_zero() || g.is_zero()) throw MathError("undefined resultant: zero polynomial");
  const IntLaurent a = f.unit_cleared();
  const IntLaurent b = g.unit_cleared();
  const int m = a.high_degree();
  const int n = b.high_degree();
  const auto size = static_cast<std::size_t>(m + n);
  IntegerMatrix s(size, size);
  for (int row = 0; row < n; ++row)
    for (int k = 0; k <= m; ++k) s(static_cast<std::size_t>(row), static_cast<std::size_t>(row + k)) = a.coefficient(m - k);
  for (int row = 0; row < m; ++row)
    for (int k = 0; k <= n; ++k)
      s(static_cast<std::size_t>(n + row), static_cast<std::size_t>(row + k)) = b.coefficient(n - k);
  return s;
}

Integer resultant(const IntLaurent& f, const IntLaurent& g) { return determinant(sylvester_matrix(f, g)); }

}  // namespace kslice
