#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kslice/exact/matrix.hpp"

namespace kslice {

/// Finitely generated abelian group Z^free_rank + Z/d_1 + ... + Z/d_k with
/// d_1 | d_2 | ... | d_k and every d_i >= 2.
struct AbelianGroup {
  std::vector<Integer> invariant_factors;
  std::size_t free_rank = 0;

  /// Cokernel shape from Smith diagonal entries plus the number of missing
  /// diagonal positions (zero rows of a wide matrix count as free).
  static AbelianGroup from_smith_diagonal(std::span<const Integer> diagonal, std::size_t extra_free = 0);

  bool is_finite() const { return free_rank == 0; }
  bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
  /// Group order, or nullopt when infinite.
  std::optional<Integer> order() const;
  /// Throws InvalidInput when the invariants are not a divisibility chain of
  /// integers >= 2.
  void validate() const;

  /// "0", "Z/3", "Z/7 + Z/7", "Z + Z/3".
  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Element of Z/m_1 + ... + Z/m_k in reduced coordinates.
std::vector<Integer> reduce_coordinates(std::span<const Integer> y, std::span<const Integer> moduli);

/// Additive order of y in Z/m_1 + ... + Z/m_k (all m_i >= 1).
Integer element_order(std::span<const Integer> y, std::span<const Integer> moduli);

/// Subgroup of a finite group Z/m_1 + ... + Z/m_k, stored as the Hermite
/// normal form of its preimage lattice L in Z^k: upper triangular, positive
/// diagonal, entries above the diagonal reduced into [0, pivot).  The form is
/// unique, so equal subgroups compare equal.
class Subgroup {
 public:
  /// Subgroup generated by the given coordinate vectors.
  static Subgroup generated_by(std::vector<Integer> moduli, const std::vector<std::vector<Integer>>& generators);
  /// Wraps a matrix already in Hermite form whose lattice contains every
  /// m_i e_i; throws InvalidInput otherwise.
  static Subgroup from_hermite_basis(std::vector<Integer> moduli, IntegerMatrix basis);

  const std::vector<Integer>& moduli() const { return moduli_; }
  const IntegerMatrix& lattice_basis() const { return basis_; }
  Integer order() const;
  bool contains(std::span<const Integer> y) const;
  /// Nonzero images of the lattice basis rows; they generate the subgroup.
  std::vector<std::vector<Integer>> generators() const;
  /// Every element of the subgroup; intended for small subgroups in checks.
  std::vector<std::vector<Integer>> elements() const;

  std::string to_string() const;

  friend bool operator==(const Subgroup&, const Subgroup&) = default;

 private:
  std::vector<Integer> moduli_;
  IntegerMatrix basis_;
};

/// Hermite normal form of the lattice spanned by the rows of m (full column
/// rank required): k x k upper triangular with reduced off-diagonal entries.
IntegerMatrix hermite_normal_form(const IntegerMatrix& m);

}  // namespace kslice
