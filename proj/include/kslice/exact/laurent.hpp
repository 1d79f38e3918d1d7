#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "kslice/exact/integer.hpp"

namespace kslice {

/// Laurent polynomial sum_k c_k t^k with finitely many nonzero c_k.
///
/// Stored densely from the lowest to the highest nonzero exponent, so the
/// first and last stored coefficients are never zero and the zero
/// polynomial stores nothing.
template <class Coeff>
class Laurent {
 public:
  Laurent() = default;
  Laurent(int c) : Laurent(Coeff(c)) {}  // NOLINT: constants convert implicitly
  Laurent(const Coeff& c) {              // NOLINT
    if (c != 0) coeffs_.push_back(c);
  }

  /// c * t^exponent
  static Laurent monomial(const Coeff& c, int exponent);
  /// sum_k coeffs[k] t^(low + k); zeros at either end are trimmed.
  static Laurent from_coefficients(int low, std::vector<Coeff> coeffs);
  static Laurent t() { return monomial(Coeff(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// Lowest exponent carrying a nonzero coefficient (0 for the zero polynomial).
  int low_degree() const { return low_; }
  /// Highest exponent carrying a nonzero coefficient (0 for the zero polynomial).
  int high_degree() const { return is_zero() ? 0 : low_ + static_cast<int>(coeffs_.size()) - 1; }
  /// high_degree - low_degree: the Euclidean norm of the Laurent ring.
  int span() const { return is_zero() ? 0 : static_cast<int>(coeffs_.size()) - 1; }
  /// True for c * t^k with c != 0.
  bool is_unit() const { return coeffs_.size() == 1; }

  Coeff coefficient(int exponent) const;
  const Coeff& leading() const { return coeffs_.back(); }
  const Coeff& trailing() const { return coeffs_.front(); }
  const std::vector<Coeff>& coefficients() const { return coeffs_; }

  Laurent shifted(int k) const;
  /// The involution t -> t^{-1}.
  Laurent conjugate() const;
  /// Shift so the lowest exponent is 0.
  Laurent unit_cleared() const { return shifted(-low_); }

  Rational evaluate(const Rational& x) const;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator-(Laurent a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Laurent operator*(const Laurent& a, const Laurent& b) { return a.times(b); }
  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  /// Descending exponents with explicit signs, e.g. "2t^2 - 5t + 2" or "t - 1/2".
  std::string to_string(const std::string& var = "t") const;

 private:
  Laurent times(const Laurent& o) const;
  void trim();

  int low_ = 0;
  std::vector<Coeff> coeffs_;
};

extern template class Laurent<Integer>;
extern template class Laurent<Rational>;

template <class Coeff>
std::ostream& operator<<(std::ostream& os, const Laurent<Coeff>& p) {
  return os << p.to_string();
}

using IntLaurent = Laurent<Integer>;
using QLaurent = Laurent<Rational>;

QLaurent to_rational(const IntLaurent& p);
/// Exact conversion; throws MathError if some coefficient is not integral.
IntLaurent to_integer(const QLaurent& p);
/// Primitive integer multiple of p (positive content removed, sign kept).
IntLaurent primitive_part(const QLaurent& p);

/// Representative of p up to units +-t^k: lowest exponent 0, positive
/// leading coefficient.
IntLaurent normalize_sign(const IntLaurent& p);
/// Representative of p up to units c*t^k: lowest exponent 0, leading
/// coefficient 1.  Zero maps to zero.
QLaurent monic(const QLaurent& p);

/// p == q up to a unit +-t^k.
bool equal_up_to_unit(const IntLaurent& p, const IntLaurent& q);
/// p == q up to a unit c*t^k with c rational.
bool equal_up_to_unit(const QLaurent& p, const QLaurent& q);

/// Quotient and remainder of ordinary polynomials (both with lowest exponent
/// >= 0); deg(remainder) < deg(divisor).
std::pair<QLaurent, QLaurent> poly_divmod(const QLaurent& a, const QLaurent& b);

/// Euclidean division in Q[t^{+-1}]: a = q*b + r with span(r) < span(b).
std::pair<QLaurent, QLaurent> laurent_divmod(const QLaurent& a, const QLaurent& b);

/// a / b when b divides a in Q[t^{+-1}]; throws MathError otherwise.
QLaurent divide_exact(const QLaurent& a, const QLaurent& b);
/// a / b when b divides a in Z[t^{+-1}]; throws MathError otherwise.
IntLaurent divide_exact(const IntLaurent& a, const IntLaurent& b);

/// Monic generator of the ideal (a, b) in Q[t^{+-1}], lowest exponent 0.
QLaurent gcd(const QLaurent& a, const QLaurent& b);

/// Residue of a in Q[t^{+-1}]/(d) as an ordinary polynomial of degree
/// < deg d.  d must have lowest exponent 0 and d(0) != 0.
QLaurent reduce_mod(const QLaurent& a, const QLaurent& d);

/// Formal derivative of an ordinary polynomial.
QLaurent derivative(const QLaurent& p);

}  // namespace kslice
