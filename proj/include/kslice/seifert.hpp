#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "kslice/exact/laurent.hpp"
#include "kslice/exact/matrix.hpp"

namespace kslice {

/// Seifert matrix V of a knot: V_ij = lk(a_i^+, a_j) for a basis a_1..a_2g of
/// H_1 of a Seifert surface.  Always satisfies det(V - V^T) = 1; construct
/// through validate_seifert.  Using V^T instead yields the same polynomial,
/// groups and metaboliser sets, with the generator roles exchanged.
class SeifertMatrix {
 public:
  SeifertMatrix() = default;

  const IntegerMatrix& matrix() const { return v_; }
  const std::optional<std::string>& name() const { return name_; }
  std::size_t size() const { return v_.rows(); }
  std::size_t genus() const { return v_.rows() / 2; }

  friend bool operator==(const SeifertMatrix&, const SeifertMatrix&) = default;

 private:
  friend SeifertMatrix validate_seifert(const IntegerMatrix&, std::optional<std::string>);
  IntegerMatrix v_;
  std::optional<std::string> name_;
};

/// Accepts exactly the square, even-sized integer matrices with
/// det(M - M^T) = 1.  Throws InvalidInput("not a Seifert matrix: ...").
SeifertMatrix validate_seifert(const IntegerMatrix& m, std::optional<std::string> name = std::nullopt);

/// tV - V^T over Q[t^{+-1}].
Matrix<QLaurent> alexander_presentation(const SeifertMatrix& v);

/// det(tV - V^T), lowest exponent 0 and positive leading coefficient.
IntLaurent alexander_polynomial(const SeifertMatrix& v);

struct ClassicalInvariants {
  /// |det(V + V^T)| = |Delta(-1)|
  Integer determinant;
  /// Signature of V + V^T.
  long signature = 0;
};

ClassicalInvariants classical_invariants(const SeifertMatrix& v);

/// Signature (positive minus negative inertia) of a symmetric rational
/// matrix, by exact congruence diagonalisation.
long signature(const RationalMatrix& symmetric);

/// V = A + U with A symmetric, entries uniform in [-bound, bound], and U the
/// strictly upper triangular matrix with ones at (2k, 2k+1), so V - V^T is the
/// standard symplectic form.  Deterministic for a given seed.
SeifertMatrix random_seifert(std::size_t genus, long bound, std::uint64_t seed);

}  // namespace kslice
