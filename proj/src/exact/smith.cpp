#include "kslice/exact/smith.hpp"

namespace kslice {

IntegerSmithForm smith_normal_form_int(const IntegerMatrix& m) { return smith_normal_form(m); }

LaurentSmithForm smith_normal_form_laurent(const Matrix<QLaurent>& m) { return smith_normal_form(m); }

std::vector<QLaurent> invariant_factors(const Matrix<QLaurent>& m) {
  return smith_normal_form_laurent(m).diagonal_entries();
}

}  // namespace kslice
