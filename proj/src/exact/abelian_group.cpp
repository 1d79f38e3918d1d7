#include "kslice/exact/abelian_group.hpp"

#include <algorithm>
#include <numeric>

#include "kslice/errors.hpp"

namespace kslice {

AbelianGroup AbelianGroup::from_smith_diagonal(std::span<const Integer> diagonal, std::size_t extra_free) {
  AbelianGroup g;
  g.free_rank = extra_free;
  for (const auto& d : diagonal) {
    if (d == 0) {
      ++g.free_rank;
    } else if (abs(d) != 1) {
      g.invariant_factors.push_back(abs(d));
    }
  }
  return g;
}

std::optional<Integer> AbelianGroup::order() const {
  if (!is_finite()) return std::nullopt;
  Integer n = 1;
  for (const auto& d : invariant_factors) n *= d;
  return n;
}

void AbelianGroup::validate() const {
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    if (invariant_factors[i] < 2) throw InvalidInput("invariant factor " + invariant_factors[i].get_str() + " < 2");
    if (i > 0 && invariant_factors[i] % invariant_factors[i - 1] != 0)
      throw InvalidInput("invariant factors do not form a divisibility chain");
  }
}

std::string AbelianGroup::to_string() const {
  std::vector<std::string> parts;
  if (free_rank == 1) parts.emplace_back("Z");
  if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (const auto& d : invariant_factors) parts.push_back("Z/" + d.get_str());
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

std::vector<Integer> reduce_coordinates(std::span<const Integer> y, std::span<const Integer> moduli) {
  if (y.size() != moduli.size()) throw std::invalid_argument("reduce_coordinates: dimension mismatch");
  std::vector<Integer> r(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) r[i] = moduli[i] == 0 ? y[i] : mod(y[i], moduli[i]);
  return r;
}

Integer element_order(std::span<const Integer> y, std::span<const Integer> moduli) {
  Integer order = 1;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (moduli[i] == 0) {
      if (y[i] != 0) throw MathError("element of infinite order");
      continue;
    }
    order = lcm(order, moduli[i] / gcd(y[i], moduli[i]));
  }
  return order;
}

IntegerMatrix hermite_normal_form(const IntegerMatrix& m) {
  IntegerMatrix a = m;
  const std::size_t k = a.cols();
  std::size_t row = 0;
  for (std::size_t col = 0; col < k; ++col) {
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t i = row; i < a.rows(); ++i)
        if (a(i, col) != 0 && (!best || abs(a(i, col)) < abs(a(*best, col)))) best = i;
      if (!best) throw InvalidInput("hermite_normal_form: lattice is not of full rank");
      a.swap_rows(row, *best);
      bool cleared = true;
      for (std::size_t i = row + 1; i < a.rows(); ++i) {
        if (a(i, col) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, col).get_mpz_t(), a(row, col).get_mpz_t());
        a.add_row_multiple(i, row, -q);
        if (a(i, col) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (a(row, col) < 0) a.scale_row(row, Integer(-1));
    for (std::size_t i = 0; i < row; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a(i, col).get_mpz_t(), a(row, col).get_mpz_t());
      if (q != 0) a.add_row_multiple(i, row, -q);
    }
    ++row;
  }
  IntegerMatrix h(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) h(i, j) = a(i, j);
  return h;
}

namespace {

// Coefficients c with c * basis = y when y lies in the lattice.
std::optional<std::vector<Integer>> solve_upper(const IntegerMatrix& basis, std::span<const Integer> y) {
  std::vector<Integer> rest(y.begin(), y.end());
  std::vector<Integer> c(basis.rows());
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    if (rest[i] % basis(i, i) != 0) return std::nullopt;
    c[i] = rest[i] / basis(i, i);
    if (c[i] != 0)
      for (std::size_t j = i; j < basis.cols(); ++j) rest[j] -= c[i] * basis(i, j);
  }
  return c;
}

}  // namespace

Subgroup Subgroup::generated_by(std::vector<Integer> moduli, const std::vector<std::vector<Integer>>& generators) {
  const std::size_t k = moduli.size();
  for (const auto& m : moduli)
    if (m < 1) throw InvalidInput("Subgroup: moduli must be positive");
  IntegerMatrix stacked(generators.size() + k, k);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].size() != k) throw InvalidInput("Subgroup: generator dimension mismatch");
    for (std::size_t j = 0; j < k; ++j) stacked(i, j) = generators[i][j];
  }
  for (std::size_t j = 0; j < k; ++j) stacked(generators.size() + j, j) = moduli[j];
  Subgroup s;
  s.moduli_ = std::move(moduli);
  s.basis_ = k == 0 ? IntegerMatrix(0, 0) : hermite_normal_form(stacked);
  return s;
}

Subgroup Subgroup::from_hermite_basis(std::vector<Integer> moduli, IntegerMatrix basis) {
  const std::size_t k = moduli.size();
  if (basis.rows() != k || basis.cols() != k) throw InvalidInput("Subgroup: basis shape mismatch");
  for (std::size_t i = 0; i < k; ++i) {
    if (basis(i, i) <= 0) throw InvalidInput("Subgroup: non-positive pivot");
    for (std::size_t j = 0; j < k; ++j) {
      if (j < i && basis(i, j) != 0) throw InvalidInput("Subgroup: basis not upper triangular");
      if (j > i && (basis(i, j) < 0 || basis(i, j) >= basis(j, j))) throw InvalidInput("Subgroup: basis not reduced");
    }
  }
  Subgroup s;
  s.moduli_ = std::move(moduli);
  s.basis_ = std::move(basis);
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Integer> e(k, Integer(0));
    e[j] = s.moduli_[j];
    if (!solve_upper(s.basis_, e)) throw InvalidInput("Subgroup: lattice does not contain the relations");
  }
  return s;
}

Integer Subgroup::order() const {
  Integer group = 1, index = 1;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    group *= moduli_[i];
    index *= basis_(i, i);
  }
  return group / index;
}

bool Subgroup::contains(std::span<const Integer> y) const {
  if (y.size() != moduli_.size()) throw std::invalid_argument("Subgroup::contains: dimension mismatch");
  return solve_upper(basis_, y).has_value();
}

std::vector<std::vector<Integer>> Subgroup::generators() const {
  std::vector<std::vector<Integer>> gens;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    auto g = reduce_coordinates(basis_.row(i), moduli_);
    if (std::any_of(g.begin(), g.end(), [](const Integer& x) { return x != 0; })) gens.push_back(std::move(g));
  }
  return gens;
}

std::vector<std::vector<Integer>> Subgroup::elements() const {
  // Enumerate coefficient vectors with c_i in [0, m_i / h_ii); each element
  // of L / (m_1 e_1, ..., m_k e_k) arises exactly once this way.
  const std::size_t k = moduli_.size();
  std::vector<std::vector<Integer>> out;
  std::vector<Integer> bound(k);
  for (std::size_t i = 0; i < k; ++i) bound[i] = moduli_[i] / basis_(i, i);
  std::vector<Integer> c(k, Integer(0));
  while (true) {
    std::vector<Integer> y(k, Integer(0));
    for (std::size_t i = 0; i < k; ++i)
      if (c[i] != 0)
        for (std::size_t j = i; j < k; ++j) y[j] += c[i] * basis_(i, j);
    out.push_back(reduce_coordinates(y, moduli_));
    std::size_t pos = 0;
    while (pos < k) {
      if (++c[pos] < bound[pos]) break;
      c[pos] = 0;
      ++pos;
    }
    if (pos == k) break;
  }
  return out;
}

std::string Subgroup::to_string() const {
  const auto gens = generators();
  if (gens.empty()) return "<0>";
  std::string out = "<";
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (g > 0) out += ", ";
    out += "(";
    for (std::size_t j = 0; j < gens[g].size(); ++j) {
      if (j > 0) out += ",";
      out += gens[g][j].get_str();
    }
    out += ")";
  }
  return out + ">";
}

}  // namespace kslice
