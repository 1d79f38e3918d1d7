#include "kslice/exact/rational_function.hpp"

#include "kslice/errors.hpp"

namespace kslice {

namespace {

struct Fraction {
  QLaurent numerator;
  QLaurent denominator;
};

// Moves powers of t into the numerator, cancels the gcd and makes the
// denominator monic.
Fraction reduce(const QLaurent& numerator, const QLaurent& denominator) {
  if (denominator.is_zero()) throw MathError("rational function with zero denominator");
  if (numerator.is_zero()) return {QLaurent(), QLaurent(1)};
  QLaurent num = numerator.shifted(-denominator.low_degree());
  QLaurent den = denominator.unit_cleared();
  const QLaurent g = gcd(num, den);
  num = divide_exact(num, g);
  den = divide_exact(den, g);
  const QLaurent scale(Rational(1) / den.leading());
  return {num * scale, den * scale};
}

}  // namespace

RationalFunction::RationalFunction(const QLaurent& numerator, const QLaurent& denominator) {
  auto f = reduce(numerator, denominator);
  numerator_ = std::move(f.numerator);
  denominator_ = std::move(f.denominator);
}

RationalFunction RationalFunction::conjugate() const {
  return {numerator_.conjugate(), denominator_.conjugate()};
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw MathError("inverse of zero rational function");
  return {denominator_, numerator_};
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.denominator_ == b.denominator_) return {a.numerator_ + b.numerator_, a.denominator_};
  return {a.numerator_ * b.denominator_ + b.numerator_ * a.denominator_, a.denominator_ * b.denominator_};
}

RationalFunction operator-(const RationalFunction& a) {
  RationalFunction r = a;
  r.numerator_ = -r.numerator_;
  return r;
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return {a.numerator_ * b.numerator_, a.denominator_ * b.denominator_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

std::string RationalFunction::to_string() const {
  if (is_polynomial()) return numerator_.to_string();
  return "(" + numerator_.to_string() + ")/(" + denominator_.to_string() + ")";
}

RationalFunctionClass::RationalFunctionClass(const QLaurent& numerator, const QLaurent& denominator) {
  auto f = reduce(numerator, denominator);
  if (f.denominator.high_degree() == 0) {
    denominator_ = QLaurent(1);
    return;
  }
  QLaurent residue = reduce_mod(f.numerator, f.denominator);
  if (residue.is_zero()) {
    denominator_ = QLaurent(1);
    return;
  }
  // numerator and denominator are already coprime; reducing the numerator
  // modulo the denominator keeps them coprime.
  numerator_ = std::move(residue);
  denominator_ = std::move(f.denominator);
}

RationalFunctionClass RationalFunctionClass::conjugate() const {
  if (is_zero()) return {};
  return {numerator_.conjugate(), denominator_.conjugate()};
}

RationalFunctionClass operator+(const RationalFunctionClass& a, const RationalFunctionClass& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.denominator_ == b.denominator_) return {a.numerator_ + b.numerator_, a.denominator_};
  return {a.numerator_ * b.denominator_ + b.numerator_ * a.denominator_, a.denominator_ * b.denominator_};
}

RationalFunctionClass operator-(const RationalFunctionClass& a) {
  RationalFunctionClass r = a;
  r.numerator_ = -r.numerator_;
  return r;
}

RationalFunctionClass operator-(const RationalFunctionClass& a, const RationalFunctionClass& b) { return a + (-b); }

RationalFunctionClass operator*(const QLaurent& p, const RationalFunctionClass& a) {
  if (a.is_zero() || p.is_zero()) return {};
  return {p * a.numerator_, a.denominator_};
}

std::string RationalFunctionClass::to_string() const {
  if (is_zero()) return "0";
  return "(" + numerator_.to_string() + ")/(" + denominator_.to_string() + ")";
}

}  // namespace kslice
