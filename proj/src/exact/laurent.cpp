#include "kslice/exact/laurent.hpp"

#include <algorithm>

#include "kslice/errors.hpp"

namespace kslice {

Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw MathError("inverse_mod: " + a.get_str() + " is not invertible modulo " + m.get_str());
  return inv;
}

template <class Coeff>
Laurent<Coeff> Laurent<Coeff>::monomial(const Coeff& c, int exponent) {
  Laurent p;
  if (c != 0) {
    p.low_ = exponent;
    p.coeffs_.push_back(c);
  }
  return p;
}

template <class Coeff>
Laurent<Coeff> Laurent<Coeff>::from_coefficients(int low, std::vector<Coeff> coeffs) {
  Laurent p;
  p.low_ = low;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

template <class Coeff>
void Laurent<Coeff>::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) low_ = 0;
}

template <class Coeff>
Coeff Laurent<Coeff>::coefficient(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > high_degree()) return Coeff(0);
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

template <class Coeff>
Laurent<Coeff> Laurent<Coeff>::shifted(int k) const {
  Laurent p = *this;
  if (!p.is_zero()) p.low_ += k;
  return p;
}

template <class Coeff>
Laurent<Coeff> Laurent<Coeff>::conjugate() const {
  if (is_zero()) return {};
  std::vector<Coeff> rev(coeffs_.rbegin(), coeffs_.rend());
  return from_coefficients(-high_degree(), std::move(rev));
}

template <class Coeff>
Rational Laurent<Coeff>::evaluate(const Rational& x) const {
  if (is_zero()) return Rational(0);
  if (x == 0 && low_ < 0) throw MathError("evaluate: negative exponent at t = 0");
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  if (low_ > 0) {
    for (int k = 0; k < low_; ++k) acc *= x;
  } else {
    for (int k = 0; k < -low_; ++k) acc /= x;
  }
  return acc;
}

template <class Coeff>
Laurent<Coeff>& Laurent<Coeff>::operator+=(const Laurent& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(high_degree(), o.high_degree());
  std::vector<Coeff> c(static_cast<std::size_t>(hi - lo + 1), Coeff(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) c[static_cast<std::size_t>(low_ - lo) + k] += coeffs_[k];
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) c[static_cast<std::size_t>(o.low_ - lo) + k] += o.coeffs_[k];
  low_ = lo;
  coeffs_ = std::move(c);
  trim();
  return *this;
}

template <class Coeff>
Laurent<Coeff>& Laurent<Coeff>::operator-=(const Laurent& o) {
  return *this += -o;
}

template <class Coeff>
Laurent<Coeff> Laurent<Coeff>::times(const Laurent& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Coeff> c(coeffs_.size() + o.coeffs_.size() - 1, Coeff(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return from_coefficients(low_ + o.low_, std::move(c));
}

namespace {

std::string coefficient_text(const Integer& c) { return c.get_str(); }

std::string coefficient_text(const Rational& c) {
  if (c.get_den() == 1) return c.get_num().get_str();
  return "(" + c.get_str() + ")";
}

std::string monomial_text(const std::string& var, int e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

}  // namespace

template <class Coeff>
std::string Laurent<Coeff>::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int e = high_degree(); e >= low_; --e) {
    Coeff c = coefficient(e);
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string mono = monomial_text(var, e);
    if (mono.empty()) {
      out += Coeff(c).get_str();
    } else {
      if (c != 1) out += coefficient_text(c);
      out += mono;
    }
  }
  return out;
}

template class Laurent<Integer>;
template class Laurent<Rational>;

QLaurent to_rational(const IntLaurent& p) {
  std::vector<Rational> c;
  c.reserve(p.coefficients().size());
  for (const auto& x : p.coefficients()) c.emplace_back(x);
  return QLaurent::from_coefficients(p.low_degree(), std::move(c));
}

IntLaurent to_integer(const QLaurent& p) {
  std::vector<Integer> c;
  c.reserve(p.coefficients().size());
  for (const auto& x : p.coefficients()) {
    if (x.get_den() != 1) throw MathError("to_integer: non-integral coefficient " + x.get_str());
    c.push_back(x.get_num());
  }
  return IntLaurent::from_coefficients(p.low_degree(), std::move(c));
}

IntLaurent primitive_part(const QLaurent& p) {
  if (p.is_zero()) return {};
  Integer den = 1;
  for (const auto& x : p.coefficients()) den = lcm(den, x.get_den());
  std::vector<Integer> c;
  Integer content = 0;
  for (const auto& x : p.coefficients()) {
    Rational scaled = x * Rational(den);
    c.push_back(scaled.get_num());
    content = gcd(content, c.back());
  }
  for (auto& x : c) x /= content;
  return IntLaurent::from_coefficients(p.low_degree(), std::move(c));
}

IntLaurent normalize_sign(const IntLaurent& p) {
  IntLaurent q = p.unit_cleared();
  if (!q.is_zero() && q.leading() < 0) q = -q;
  return q;
}

QLaurent monic(const QLaurent& p) {
  if (p.is_zero()) return {};
  const Rational inv = 1 / p.leading();
  QLaurent q = p.unit_cleared();
  return q * QLaurent(inv);
}

bool equal_up_to_unit(const IntLaurent& p, const IntLaurent& q) {
  return normalize_sign(p) == normalize_sign(q);
}

bool equal_up_to_unit(const QLaurent& p, const QLaurent& q) { return monic(p) == monic(q); }

std::pair<QLaurent, QLaurent> poly_divmod(const QLaurent& a, const QLaurent& b) {
  if (b.is_zero()) throw MathError("poly_divmod: division by zero");
  if (a.is_zero()) return {QLaurent(), QLaurent()};
  if (a.low_degree() < 0 || b.low_degree() < 0)
    throw std::invalid_argument("poly_divmod: arguments must be ordinary polynomials");
  const int db = b.high_degree();
  std::vector<Rational> rem(static_cast<std::size_t>(a.high_degree() + 1), Rational(0));
  for (int e = a.low_degree(); e <= a.high_degree(); ++e) rem[static_cast<std::size_t>(e)] = a.coefficient(e);
  std::vector<Rational> bc(static_cast<std::size_t>(db + 1), Rational(0));
  for (int e = b.low_degree(); e <= db; ++e) bc[static_cast<std::size_t>(e)] = b.coefficient(e);
  const Rational lead = bc.back();
  const int da = a.high_degree();
  if (da < db) return {QLaurent(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(da - db + 1), Rational(0));
  for (int k = da; k >= db; --k) {
    const Rational c = rem[static_cast<std::size_t>(k)] / lead;
    quot[static_cast<std::size_t>(k - db)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= c * bc[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {QLaurent::from_coefficients(0, std::move(quot)), QLaurent::from_coefficients(0, std::move(rem))};
}

std::pair<QLaurent, QLaurent> laurent_divmod(const QLaurent& a, const QLaurent& b) {
  if (b.is_zero()) throw MathError("laurent_divmod: division by zero");
  if (a.is_zero()) return {QLaurent(), QLaurent()};
  const int j = a.low_degree();
  const int k = b.low_degree();
  auto [q, r] = poly_divmod(a.unit_cleared(), b.unit_cleared());
  return {q.shifted(j - k), r.shifted(j)};
}

QLaurent divide_exact(const QLaurent& a, const QLaurent& b) {
  auto [q, r] = laurent_divmod(a, b);
  if (!r.is_zero()) throw MathError("divide_exact: " + b.to_string() + " does not divide " + a.to_string());
  return q;
}

IntLaurent divide_exact(const IntLaurent& a, const IntLaurent& b) {
  return to_integer(divide_exact(to_rational(a), to_rational(b)));
}

QLaurent gcd(const QLaurent& a, const QLaurent& b) {
  QLaurent x = a.unit_cleared();
  QLaurent y = b.unit_cleared();
  while (!y.is_zero()) {
    QLaurent r = poly_divmod(x, y).second;
    x = std::move(y);
    y = r.unit_cleared();
  }
  return monic(x);
}

QLaurent reduce_mod(const QLaurent& a, const QLaurent& d) {
  if (d.is_zero() || d.low_degree() != 0) throw std::invalid_argument("reduce_mod: modulus must have nonzero constant term");
  if (d.high_degree() == 0) return {};
  if (a.is_zero()) return {};
  QLaurent r = poly_divmod(a.unit_cleared(), d).second;
  const int shift = a.low_degree();
  if (shift > 0) {
    return poly_divmod(r.shifted(shift), d).second;
  }
  // t^{-1} = -(d - d(0)) / (d(0) t)  mod d
  const Rational d0 = d.coefficient(0);
  const QLaurent t_inverse = (d - QLaurent(d0)).shifted(-1) * QLaurent(Rational(-1) / d0);
  for (int k = 0; k < -shift; ++k) r = poly_divmod(r * t_inverse, d).second;
  return r;
}

QLaurent derivative(const QLaurent& p) {
  if (p.is_zero()) return {};
  if (p.low_degree() < 0) throw std::invalid_argument("derivative: ordinary polynomial expected");
  std::vector<Rational> c;
  for (int e = 1; e <= p.high_degree(); ++e) c.push_back(Rational(e) * p.coefficient(e));
  return QLaurent::from_coefficients(0, std::move(c));
}

}  // namespace kslice
