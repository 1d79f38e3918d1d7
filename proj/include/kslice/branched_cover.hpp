#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kslice/exact/abelian_group.hpp"
#include "kslice/exact/smith.hpp"
#include "kslice/seifert.hpp"

namespace kslice {

/// H_1 of the r-fold cyclic branched cover, presented over Z by the rows of
/// P (x) V - I (x) V^T, where P is the r x r shift matrix with P(k, k+1 mod r)
/// = 1.  Row (b, k) is the relation t^b (tV - V^T)_k, so basis vector (a, i)
/// is the lift t^a e_i and the deck transformation is right multiplication
/// by P (x) I.
class CoverPresentation {
 public:
  static CoverPresentation build(const SeifertMatrix& v, long r);

  long degree() const { return r_; }
  std::size_t seifert_size() const { return seifert_size_; }
  const IntegerMatrix& presentation() const { return presentation_; }
  /// P (x) I acting on row vectors.
  const IntegerMatrix& deck() const { return deck_; }
  const IntegerSmithForm& smith() const { return smith_; }
  const AbelianGroup& group() const { return group_; }

  /// Orders of the cyclic coordinates kept in elements: the Smith diagonal
  /// entries other than 1 (0 marks a free coordinate).
  const std::vector<Integer>& moduli() const { return moduli_; }
  /// Coordinates of the class of an integer row vector of length 2g*r.
  std::vector<Integer> coordinates(std::span<const Integer> x) const;
  /// Deck action on element coordinates (row-vector convention).
  const IntegerMatrix& deck_on_coordinates() const { return deck_coordinates_; }

 private:
  long r_ = 1;
  std::size_t seifert_size_ = 0;
  IntegerMatrix presentation_;
  IntegerMatrix deck_;
  IntegerSmithForm smith_;
  AbelianGroup group_;
  std::vector<std::size_t> kept_;  // Smith positions with diagonal != 1
  std::vector<Integer> moduli_;
  IntegerMatrix deck_coordinates_;
};

/// Element of the cover homology in Smith coordinates, reduced modulo the
/// invariant factors.
struct CoverElement {
  std::vector<Integer> coordinates;
  std::vector<Integer> moduli;
  /// Additive order; nullopt when the element has infinite order.
  std::optional<Integer> order;

  friend bool operator==(const CoverElement&, const CoverElement&) = default;
};

CoverPresentation cover_presentation(const SeifertMatrix& v, long r);

AbelianGroup cover_homology(const SeifertMatrix& v, long r);

/// |Res(Delta, (t^r - 1)/(t - 1))|, or nullopt ("infinite") when it vanishes.
std::optional<Integer> cover_order_resultant(const SeifertMatrix& v, long r);

/// Class x_i of e_i in the t^0 block (0-based generator index).  Throws
/// Unsupported("cover homology not finite") for infinite homology and
/// InvalidInput for an index out of range.
CoverElement lifted_generator(const CoverPresentation& cover, std::size_t generator);

/// Image under the deck transformation.
CoverElement deck_image(const CoverPresentation& cover, const CoverElement& x);

CoverElement scale(const CoverElement& x, const Integer& k);

/// Finite homology of odd order.
bool is_z2_homology_sphere(const SeifertMatrix& v, long r);

/// Torsion linking form on a finite group, valued in Q/Z.  The gram entries
/// are representatives in [0, 1).
struct LinkingForm {
  AbelianGroup group;
  RationalMatrix gram;
  /// Row i: coordinates of the image of Seifert generator e_i.
  IntegerMatrix generator_images;

  /// lambda(x, y) in [0, 1).
  Rational value(std::span<const Integer> x, std::span<const Integer> y) const;
};

/// (V + V^T)^{-1} mod 1 on the cokernel of V + V^T, transported to Smith
/// coordinates.  Under the identification H_1(Sigma_2) = coker(V + V^T),
/// e_i carries x_i.  Throws MathError("degenerate double cover") when
/// det(V + V^T) = 0.
LinkingForm double_cover_linking_form(const SeifertMatrix& v);

struct LinkingMetaboliser {
  Subgroup subgroup;
  /// Set only when a deck action was supplied.
  std::optional<bool> deck_invariant;
};

/// Every subgroup P with |P|^2 = |G| on which the form vanishes; for a
/// nonsingular form these are exactly the P with P = P^perp.  Candidates are
/// enumerated as Hermite lattice bases.  Empty when |G| is not a square;
/// throws Unsupported("brute force bound exceeded") above 10^6.
std::vector<LinkingMetaboliser> linking_metabolisers(const LinkingForm& form,
                                                     const std::optional<IntegerMatrix>& deck = std::nullopt);

/// Group order limit for linking_metabolisers.
inline constexpr long kLinkingBruteForceBound = 1'000'000;

/// Necessary conditions for a subgroup of H_1(Sigma_r) generated by lifted
/// Seifert generators to be the kernel into a slice-disc cover.
struct SubgroupCheck {
  long r = 0;
  std::vector<std::size_t> generators;
  Integer order;
  Integer group_order;
  bool square_order = false;
  bool deck_invariant = false;
  /// Only evaluated at r = 2.
  std::optional<bool> self_annihilating;
  std::string note;

  bool passes() const { return square_order && deck_invariant && self_annihilating.value_or(true); }
};

SubgroupCheck invariant_subgroup_check(const SeifertMatrix& v, long r, const std::vector<std::size_t>& generators);

}  // namespace kslice
