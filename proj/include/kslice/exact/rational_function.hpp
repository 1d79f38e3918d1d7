#pragma once

#include <string>

#include "kslice/exact/laurent.hpp"

namespace kslice {

/// Element of Q(t) in lowest terms.
///
/// Canonical form: numerator / denominator with the denominator an ordinary
/// monic polynomial whose constant term is nonzero (any power of t lives in
/// the numerator) and gcd(numerator, denominator) = 1.  Equal values have
/// identical representations.
class RationalFunction {
 public:
  RationalFunction() : denominator_(1) {}
  RationalFunction(const QLaurent& p) : numerator_(p), denominator_(1) {}  // NOLINT
  RationalFunction(int c) : RationalFunction(QLaurent(c)) {}               // NOLINT
  RationalFunction(const QLaurent& numerator, const QLaurent& denominator);

  const QLaurent& numerator() const { return numerator_; }
  const QLaurent& denominator() const { return denominator_; }
  bool is_zero() const { return numerator_.is_zero(); }
  bool is_polynomial() const { return denominator_.high_degree() == 0; }

  RationalFunction conjugate() const;
  RationalFunction inverse() const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  std::string to_string() const;

 private:
  QLaurent numerator_;
  QLaurent denominator_;
};

/// Residue class in Q(t)/Q[t^{+-1}], where Blanchfield values live.
///
/// Canonical representative numerator / denominator: the denominator is
/// monic with lowest exponent 0 and nonzero constant term, the numerator is an
/// ordinary polynomial of smaller degree, and the two are coprime.  The zero
/// class has numerator 0 and denominator 1.
class RationalFunctionClass {
 public:
  RationalFunctionClass() : denominator_(1) {}
  /// Class of numerator / denominator for arbitrary Laurent polynomials.
  RationalFunctionClass(const QLaurent& numerator, const QLaurent& denominator);
  explicit RationalFunctionClass(const RationalFunction& f)
      : RationalFunctionClass(f.numerator(), f.denominator()) {}

  const QLaurent& numerator() const { return numerator_; }
  const QLaurent& denominator() const { return denominator_; }
  bool is_zero() const { return numerator_.is_zero(); }

  RationalFunctionClass conjugate() const;

  friend RationalFunctionClass operator+(const RationalFunctionClass& a, const RationalFunctionClass& b);
  friend RationalFunctionClass operator-(const RationalFunctionClass& a, const RationalFunctionClass& b);
  friend RationalFunctionClass operator-(const RationalFunctionClass& a);
  friend RationalFunctionClass operator*(const QLaurent& p, const RationalFunctionClass& a);
  RationalFunctionClass& operator+=(const RationalFunctionClass& o) { return *this = *this + o; }
  friend bool operator==(const RationalFunctionClass&, const RationalFunctionClass&) = default;

  /// "0" or "(n)/(d)".
  std::string to_string() const;

 private:
  QLaurent numerator_;
  QLaurent denominator_;
};

}  // namespace kslice
