#pragma once

#include <span>
#include <vector>

#include "kslice/exact/factor.hpp"
#include "kslice/exact/rational_function.hpp"
#include "kslice/exact/smith.hpp"
#include "kslice/seifert.hpp"

namespace kslice {

using QVector = std::vector<Rational>;

/// Primary component ker p(t)^e of the rational Alexander module.
struct PrimaryComponent {
  QLaurent prime;
  int multiplicity = 1;
  /// False when p is a rootless remainder that might still split.
  bool resolved = true;
  /// Q-basis of the component, one vector per row.
  RationalMatrix basis;
  /// Q[t^{+-1}]-module generators of the component.
  std::vector<QVector> generators;
};

/// H_1 of the infinite cyclic cover with Q coefficients, presented as the
/// cokernel of tV - V^T acting on row vectors: elements are rows of Laurent
/// polynomials x = (x_1, ..., x_2g) modulo Q[t^{+-1}]-combinations of the
/// rows of tV - V^T.  Under this convention the generator e_i pairs with
/// e_j via entry (i, j) of (t - 1)(tV - V^T)^{-1}.
///
/// Elements are handled in Q-coordinates: the Smith form U A W = D maps x to
/// x W, whose j-th entry is read modulo the invariant factor d_j as a
/// polynomial of degree < deg d_j.  t acts on these coordinate columns by a
/// block-companion matrix.
class AlexanderModule {
 public:
  static AlexanderModule build(const SeifertMatrix& v);

  const SeifertMatrix& source() const { return source_; }
  std::size_t q_dimension() const { return dimension_; }
  /// Action of t on coordinate columns.
  const RationalMatrix& t_action() const { return t_action_; }
  /// All Smith diagonal entries of tV - V^T (units appear as 1).
  std::vector<QLaurent> invariant_factors() const { return smith_.diagonal_entries(); }
  /// Monic product of the invariant factors; equals Delta up to a unit.
  const QLaurent& order_polynomial() const { return order_; }
  const RationalFactorization& factorization() const { return factorization_; }
  const std::vector<PrimaryComponent>& primary_decomposition() const { return primary_; }
  bool primary_decomposition_complete() const { return factorization_.fully_resolved(); }
  /// Images of the presentation generators e_1 .. e_2g.
  const std::vector<QVector>& generator_classes() const { return generators_; }
  /// At most one invariant factor of positive degree.
  bool is_cyclic() const;

  /// Q-coordinates of the class of a Laurent row vector.
  QVector coordinates(std::span<const QLaurent> x) const;
  /// A Laurent row vector representing the element with the given coordinates.
  std::vector<QLaurent> lift(std::span<const Rational> v) const;
  /// p . v
  QVector act(const QLaurent& p, std::span<const Rational> v) const;
  /// Matrix of multiplication by an ordinary polynomial p on coordinates.
  RationalMatrix polynomial_action(const QLaurent& p) const;
  /// Monic generator of the annihilator ideal of v (1 for v = 0).
  QLaurent annihilator(std::span<const Rational> v) const;
  /// det(tI - T) computed from the action matrix, monic.
  QLaurent characteristic_polynomial() const;

 private:
  SeifertMatrix source_;
  LaurentSmithForm smith_;
  std::vector<std::size_t> nontrivial_;  // Smith positions with deg d_j >= 1
  std::vector<std::size_t> offsets_;     // first coordinate of each nontrivial block
  std::size_t dimension_ = 0;
  RationalMatrix t_action_;
  QLaurent order_;
  RationalFactorization factorization_;
  std::vector<PrimaryComponent> primary_;
  std::vector<QVector> generators_;
};

/// t-invariant Q-subspace of an Alexander module, held as a reduced row
/// echelon basis so that equal submodules compare equal.
class Submodule {
 public:
  /// The smallest submodule containing the given coordinate vectors.
  static Submodule generated_by(const AlexanderModule& m, const std::vector<QVector>& vectors);
  /// Wraps a Q-subspace; throws std::logic_error if it is not t-invariant.
  static Submodule from_subspace(const AlexanderModule& m, const RationalMatrix& rows);
  static Submodule zero(const AlexanderModule& m);
  static Submodule whole(const AlexanderModule& m);

  const RationalMatrix& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.rows(); }
  std::size_t ambient_dimension() const { return basis_.cols(); }
  bool contains(std::span<const Rational> v) const;
  bool contains(const Submodule& other) const;

  friend bool operator==(const Submodule&, const Submodule&) = default;

 private:
  RationalMatrix basis_;
};

/// Gram matrix (t - 1)(tV - V^T)^{-1} of the Blanchfield pairing on the
/// presentation generators, as classes in Q(t)/Q[t^{+-1}].  Row index is the
/// first argument; the pairing is linear in the first argument and
/// conjugate-linear in the second.
class BlanchfieldPairing {
 public:
  /// Throws std::logic_error if the computed gram fails to be Hermitian.
  static BlanchfieldPairing of(const SeifertMatrix& v);

  const Matrix<RationalFunctionClass>& gram() const { return gram_; }
  /// sum_ij x_i conj(y_j) gram(i, j) for Laurent row vectors.
  RationalFunctionClass pair(std::span<const QLaurent> x, std::span<const QLaurent> y) const;
  /// gram(i, j) == conj(gram(j, i)) for all i, j.
  bool is_hermitian() const;

 private:
  Matrix<RationalFunctionClass> gram_;
};

BlanchfieldPairing blanchfield_gram(const SeifertMatrix& v);

/// Pairing of two module elements given in Q-coordinates.  Throws
/// InvalidInput on a dimension mismatch.
RationalFunctionClass bl_pair(const AlexanderModule& m, const BlanchfieldPairing& bl, std::span<const Rational> x,
                              std::span<const Rational> y);

/// Every submodule of a cyclic module with fully resolved order polynomial:
/// one per monic divisor h of the order, namely h . M.  Sorted by dimension.
/// Throws Unsupported for non-cyclic modules or unresolved factorisations.
std::vector<Submodule> enumerate_submodules(const AlexanderModule& m);

/// {x : Bl(x, p) = 0 for every p in P}, via an exact linear system over Q.
Submodule orthogonal_complement(const AlexanderModule& m, const BlanchfieldPairing& bl, const Submodule& p);

/// The submodules P with P = P^perp.  Empty when q_dimension is odd.
std::vector<Submodule> metabolisers(const AlexanderModule& m, const BlanchfieldPairing& bl);

/// The unique metaboliser containing x.  Throws MathError("no metaboliser
/// contains x") or MathError("metaboliser not unique").
Submodule unique_metaboliser_containing(const AlexanderModule& m, const BlanchfieldPairing& bl,
                                        std::span<const Rational> x);

/// {x : Bl(x, y) = 0 for all y}; zero iff the pairing is nonsingular.
Submodule radical(const AlexanderModule& m, const BlanchfieldPairing& bl);

}  // namespace kslice
