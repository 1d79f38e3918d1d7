#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace kslice {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

/// Least non-negative residue of a modulo m (m > 0).
inline Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

/// Fractional part of q, in [0, 1).
inline Rational mod_one(const Rational& q) {
  Integer floor_part;
  mpz_fdiv_q(floor_part.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Rational r = q - Rational(floor_part);
  r.canonicalize();
  return r;
}

inline Integer pow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

inline bool is_perfect_square(const Integer& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Integer isqrt(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline bool is_prime(const Integer& n) {
  return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

/// Inverse of a modulo m; throws MathError when gcd(a, m) != 1.
Integer inverse_mod(const Integer& a, const Integer& m);

inline std::string to_string(const Integer& n) { return n.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace kslice
