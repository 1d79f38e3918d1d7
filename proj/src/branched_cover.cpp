#include "kslice/branched_cover.hpp"

#include <algorithm>
#include <functional>

#include "kslice/errors.hpp"
#include "kslice/exact/linear_algebra.hpp"
#include "kslice/exact/resultant.hpp"

namespace kslice {

namespace {

void require_degree(long r) {
  if (r < 1) throw InvalidInput("cover degree r must be >= 1, got " + std::to_string(r));
}

IntegerMatrix shift_matrix(long r) {
  const auto n = static_cast<std::size_t>(r);
  IntegerMatrix p(n, n);
  for (std::size_t k = 0; k < n; ++k) p(k, (k + 1) % n) = 1;
  return p;
}

void require_finite(const CoverPresentation& cover) {
  if (!cover.group().is_finite()) throw Unsupported("cover homology not finite");
}

CoverElement make_element(std::vector<Integer> coords, const std::vector<Integer>& moduli) {
  CoverElement e;
  e.coordinates = reduce_coordinates(coords, moduli);
  e.moduli = moduli;
  const bool infinite = std::any_of(moduli.begin(), moduli.end(), [](const Integer& m) { return m == 0; });
  if (!infinite) e.order = element_order(e.coordinates, moduli);
  return e;
}

}  // namespace

CoverPresentation CoverPresentation::build(const SeifertMatrix& v, long r) {
  require_degree(r);
  CoverPresentation c;
  c.r_ = r;
  c.seifert_size_ = v.size();
  const IntegerMatrix p = shift_matrix(r);
  const auto ident_r = IntegerMatrix::identity(static_cast<std::size_t>(r));
  c.presentation_ = kronecker(p, v.matrix()) - kronecker(ident_r, v.matrix().transpose());
  c.deck_ = kronecker(p, IntegerMatrix::identity(v.size()));
  c.smith_ = smith_normal_form_int(c.presentation_);
  const auto diag = c.smith_.diagonal_entries();
  c.group_ = AbelianGroup::from_smith_diagonal(diag);
  for (std::size_t j = 0; j < diag.size(); ++j) {
    if (diag[j] == 1) continue;
    c.kept_.push_back(j);
    c.moduli_.push_back(diag[j]);
  }
  const IntegerMatrix full = c.smith_.right_inverse * c.deck_ * c.smith_.right;
  c.deck_coordinates_ = full.submatrix(c.kept_, c.kept_);
  return c;
}

std::vector<Integer> CoverPresentation::coordinates(std::span<const Integer> x) const {
  if (x.size() != presentation_.rows()) throw InvalidInput("cover coordinates: dimension mismatch");
  const auto y = row_times(x, smith_.right);
  std::vector<Integer> kept(kept_.size());
  for (std::size_t k = 0; k < kept_.size(); ++k) kept[k] = y[kept_[k]];
  return reduce_coordinates(kept, moduli_);
}

CoverPresentation cover_presentation(const SeifertMatrix& v, long r) { return CoverPresentation::build(v, r); }

AbelianGroup cover_homology(const SeifertMatrix& v, long r) { return CoverPresentation::build(v, r).group(); }

std::optional<Integer> cover_order_resultant(const SeifertMatrix& v, long r) {
  require_degree(r);
  const IntLaurent delta = alexander_polynomial(v);
  const IntLaurent cyclotomic_product =
      IntLaurent::from_coefficients(0, std::vector<Integer>(static_cast<std::size_t>(r), Integer(1)));
  const Integer res = abs(resultant(delta, cyclotomic_product));
  if (res == 0) return std::nullopt;
  return res;
}

CoverElement lifted_generator(const CoverPresentation& cover, std::size_t generator) {
  if (cover.seifert_size() == 0) throw InvalidInput("lifted_generator: the cover of the unknot has no generators");
  if (generator >= cover.seifert_size())
    throw InvalidInput("lifted_generator: generator index " + std::to_string(generator) + " out of range");
  require_finite(cover);
  std::vector<Integer> e(cover.presentation().rows(), Integer(0));
  e[generator] = 1;
  return make_element(cover.coordinates(e), cover.moduli());
}

CoverElement deck_image(const CoverPresentation& cover, const CoverElement& x) {
  require_finite(cover);
  if (x.coordinates.size() != cover.moduli().size()) throw InvalidInput("deck_image: element from another cover");
  return make_element(row_times(std::span<const Integer>(x.coordinates), cover.deck_on_coordinates()), cover.moduli());
}

CoverElement scale(const CoverElement& x, const Integer& k) {
  std::vector<Integer> c = x.coordinates;
  for (auto& v : c) v *= k;
  return make_element(std::move(c), x.moduli);
}

bool is_z2_homology_sphere(const SeifertMatrix& v, long r) {
  const auto order = cover_homology(v, r).order();
  return order.has_value() && mpz_odd_p(order->get_mpz_t()) != 0;
}

Rational LinkingForm::value(std::span<const Integer> x, std::span<const Integer> y) const {
  if (x.size() != gram.rows() || y.size() != gram.cols()) throw InvalidInput("linking form: dimension mismatch");
  Rational total = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) total += Rational(x[i] * y[j]) * gram(i, j);
  }
  return mod_one(total);
}

LinkingForm double_cover_linking_form(const SeifertMatrix& v) {
  const IntegerMatrix sym = v.matrix() + v.matrix().transpose();
  const auto smith = smith_normal_form_int(sym);
  const auto diag = smith.diagonal_entries();
  if (std::any_of(diag.begin(), diag.end(), [](const Integer& d) { return d == 0; }))
    throw MathError("degenerate double cover: det(V+V^T) = 0");
  std::vector<std::size_t> kept;
  for (std::size_t j = 0; j < diag.size(); ++j)
    if (diag[j] != 1) kept.push_back(j);

  LinkingForm form;
  form.group = AbelianGroup::from_smith_diagonal(diag);
  const RationalMatrix w_inv = to_rational(smith.right_inverse);
  const RationalMatrix full = w_inv * inverse(to_rational(sym)) * w_inv.transpose();
  form.gram = full.submatrix(kept, kept).map([](const Rational& q) { return mod_one(q); });
  std::vector<std::size_t> all(v.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  form.generator_images = smith.right.submatrix(all, kept);
  for (std::size_t i = 0; i < form.generator_images.rows(); ++i)
    for (std::size_t j = 0; j < kept.size(); ++j)
      form.generator_images(i, j) = mod(form.generator_images(i, j), diag[kept[j]]);
  return form;
}

std::vector<LinkingMetaboliser> linking_metabolisers(const LinkingForm& form, const std::optional<IntegerMatrix>& deck) {
  const auto order = form.group.order();
  if (!order) throw Unsupported("linking form on an infinite group");
  if (*order > kLinkingBruteForceBound)
    throw Unsupported("brute force bound exceeded: group order " + order->get_str() + " > " +
                      std::to_string(kLinkingBruteForceBound));
  std::vector<LinkingMetaboliser> out;
  if (!is_perfect_square(*order)) return out;
  const Integer target = isqrt(*order);
  const std::vector<Integer>& moduli = form.group.invariant_factors;
  const std::size_t k = moduli.size();
  if (deck && (deck->rows() != k || deck->cols() != k)) throw InvalidInput("linking_metabolisers: deck shape mismatch");

  IntegerMatrix h(k, k);
  auto contains_relations = [&]() {
    for (std::size_t j = 0; j < k; ++j) {
      // d_j e_j lies in the lattice iff back substitution stays integral.
      std::vector<Integer> rest(k, Integer(0));
      rest[j] = moduli[j];
      for (std::size_t i = 0; i < k; ++i) {
        if (rest[i] % h(i, i) != 0) return false;
        const Integer c = rest[i] / h(i, i);
        if (c != 0)
          for (std::size_t l = i; l < k; ++l) rest[l] -= c * h(i, l);
      }
    }
    return true;
  };
  auto isotropic = [&]() {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i; j < k; ++j)
        if (form.value(h.row(i), h.row(j)) != 0) return false;
    return true;
  };
  auto consider = [&]() {
    if (!contains_relations() || !isotropic()) return;
    LinkingMetaboliser lm{Subgroup::from_hermite_basis(moduli, h), std::nullopt};
    if (deck) {
      bool invariant = true;
      for (std::size_t i = 0; i < k && invariant; ++i)
        invariant = lm.subgroup.contains(row_times(h.row(i), *deck));
      lm.deck_invariant = invariant;
    }
    out.push_back(std::move(lm));
  };
  // Off-diagonal entries above each pivot range over [0, pivot).
  std::function<void(std::size_t)> fill_off_diagonal = [&](std::size_t slot) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        if (count++ != slot) continue;
        for (Integer x = 0; x < h(j, j); ++x) {
          h(i, j) = x;
          fill_off_diagonal(slot + 1);
        }
        h(i, j) = 0;
        return;
      }
    consider();
  };
  std::function<void(std::size_t, const Integer&)> choose_diagonal = [&](std::size_t i, const Integer& remaining) {
    if (i == k) {
      if (remaining == 1) fill_off_diagonal(0);
      return;
    }
    for (Integer d = 1; d <= moduli[i] && d <= remaining; ++d) {
      if (moduli[i] % d != 0 || remaining % d != 0) continue;
      h(i, i) = d;
      choose_diagonal(i + 1, remaining / d);
    }
    h(i, i) = 0;
  };
  choose_diagonal(0, target);
  return out;
}

SubgroupCheck invariant_subgroup_check(const SeifertMatrix& v, long r, const std::vector<std::size_t>& generators) {
  const auto cover = CoverPresentation::build(v, r);
  require_finite(cover);
  SubgroupCheck check;
  check.r = r;
  check.generators = generators;
  std::vector<std::vector<Integer>> coords;
  for (auto g : generators) coords.push_back(lifted_generator(cover, g).coordinates);
  const auto subgroup = Subgroup::generated_by(cover.moduli(), coords);
  check.order = subgroup.order();
  check.group_order = *cover.group().order();
  check.square_order = check.order * check.order == check.group_order;
  check.deck_invariant = true;
  for (const auto& c : coords)
    if (!subgroup.contains(row_times(std::span<const Integer>(c), cover.deck_on_coordinates()))) check.deck_invariant = false;
  if (r == 2) {
    const auto form = double_cover_linking_form(v);
    bool isotropic = true;
    for (auto a : generators)
      for (auto b : generators)
        if (form.value(form.generator_images.row(a), form.generator_images.row(b)) != 0) isotropic = false;
    check.self_annihilating = isotropic;
    check.note = "necessary conditions only; linking-form self-annihilation checked at r = 2";
  } else {
    check.note = "necessary conditions only; linking-form self-annihilation verified only at r = 2";
  }
  return check;
}

}  // namespace kslice
