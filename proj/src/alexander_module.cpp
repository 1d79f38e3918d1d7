#include "kslice/alexander_module.hpp"

#include <algorithm>
#include <stdexcept>

#include "kslice/errors.hpp"
#include "kslice/exact/determinant.hpp"
#include "kslice/exact/fraction_field.hpp"
#include "kslice/exact/linear_algebra.hpp"

namespace kslice {

namespace {

bool is_zero_vector(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

RationalMatrix rows_of(const std::vector<QVector>& vectors, std::size_t cols) {
  RationalMatrix m(vectors.size(), cols);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = vectors[i][j];
  return m;
}

}  // namespace

AlexanderModule AlexanderModule::build(const SeifertMatrix& v) {
  AlexanderModule m;
  m.source_ = v;
  m.smith_ = smith_normal_form_laurent(alexander_presentation(v));
  const auto diag = m.smith_.diagonal_entries();
  for (std::size_t j = 0; j < diag.size(); ++j) {
    if (diag[j].is_zero()) throw std::logic_error("Alexander presentation is singular");
    if (diag[j].high_degree() == 0) continue;
    m.nontrivial_.push_back(j);
    m.offsets_.push_back(m.dimension_);
    m.dimension_ += static_cast<std::size_t>(diag[j].high_degree());
  }

  m.t_action_ = RationalMatrix(m.dimension_, m.dimension_);
  m.order_ = QLaurent(1);
  for (std::size_t b = 0; b < m.nontrivial_.size(); ++b) {
    const QLaurent& d = diag[m.nontrivial_[b]];
    m.order_ = m.order_ * d;
    const std::size_t n = static_cast<std::size_t>(d.high_degree());
    const std::size_t off = m.offsets_[b];
    for (std::size_t k = 0; k + 1 < n; ++k) m.t_action_(off + k + 1, off + k) = 1;
    for (std::size_t i = 0; i < n; ++i) m.t_action_(off + i, off + n - 1) = -d.coefficient(static_cast<int>(i));
  }

  for (std::size_t i = 0; i < v.size(); ++i) {
    std::vector<QLaurent> e(v.size(), QLaurent());
    e[i] = QLaurent(1);
    m.generators_.push_back(m.coordinates(e));
  }

  m.factorization_ = factor_over_rationals(m.order_);
  for (const auto& f : m.factorization_.factors) {
    PrimaryComponent c;
    c.prime = f.polynomial;
    c.multiplicity = f.multiplicity;
    c.resolved = f.resolved;
    QLaurent power(1);
    for (int k = 0; k < f.multiplicity; ++k) power = power * f.polynomial;
    c.basis = nullspace(m.polynomial_action(power));
    for (std::size_t b = 0; b < m.nontrivial_.size(); ++b) {
      QLaurent cofactor = diag[m.nontrivial_[b]];
      int exponent = 0;
      while (true) {
        auto [q, r] = poly_divmod(cofactor, f.polynomial);
        if (!r.is_zero()) break;
        cofactor = q;
        ++exponent;
      }
      if (exponent == 0) continue;
      QVector basis_vector(m.dimension_, Rational(0));
      basis_vector[m.offsets_[b]] = 1;
      c.generators.push_back(times_column(m.polynomial_action(cofactor), std::span<const Rational>(basis_vector)));
    }
    m.primary_.push_back(std::move(c));
  }
  return m;
}

bool AlexanderModule::is_cyclic() const { return nontrivial_.size() <= 1; }

QVector AlexanderModule::coordinates(std::span<const QLaurent> x) const {
  if (x.size() != source_.size()) throw InvalidInput("coordinates: expected " + std::to_string(source_.size()) + " entries");
  const auto y = row_times(x, smith_.right);
  QVector v(dimension_, Rational(0));
  for (std::size_t b = 0; b < nontrivial_.size(); ++b) {
    const QLaurent& d = smith_.diagonal(nontrivial_[b], nontrivial_[b]);
    const QLaurent r = reduce_mod(y[nontrivial_[b]], d);
    for (int k = 0; k < d.high_degree(); ++k) v[offsets_[b] + static_cast<std::size_t>(k)] = r.coefficient(k);
  }
  return v;
}

std::vector<QLaurent> AlexanderModule::lift(std::span<const Rational> v) const {
  if (v.size() != dimension_) throw InvalidInput("lift: expected " + std::to_string(dimension_) + " coordinates");
  std::vector<QLaurent> y(source_.size(), QLaurent());
  for (std::size_t b = 0; b < nontrivial_.size(); ++b) {
    const QLaurent& d = smith_.diagonal(nontrivial_[b], nontrivial_[b]);
    std::vector<Rational> c(static_cast<std::size_t>(d.high_degree()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = v[offsets_[b] + k];
    y[nontrivial_[b]] = QLaurent::from_coefficients(0, std::move(c));
  }
  return row_times(std::span<const QLaurent>(y), smith_.right_inverse);
}

QVector AlexanderModule::act(const QLaurent& p, std::span<const Rational> v) const {
  auto x = lift(v);
  for (auto& xi : x) xi = p * xi;
  return coordinates(x);
}

RationalMatrix AlexanderModule::polynomial_action(const QLaurent& p) const {
  if (p.low_degree() < 0) throw std::invalid_argument("polynomial_action: ordinary polynomial expected");
  RationalMatrix acc(dimension_, dimension_);
  for (int e = p.high_degree(); e >= 0; --e) {
    acc = t_action_ * acc;
    const Rational c = p.coefficient(e);
    if (c != 0)
      for (std::size_t i = 0; i < dimension_; ++i) acc(i, i) += c;
  }
  return acc;
}

QLaurent AlexanderModule::annihilator(std::span<const Rational> v) const {
  if (v.size() != dimension_) throw InvalidInput("annihilator: dimension mismatch");
  if (is_zero_vector(v)) return QLaurent(1);
  std::vector<QVector> krylov{QVector(v.begin(), v.end())};
  while (true) {
    krylov.push_back(times_column(t_action_, std::span<const Rational>(krylov.back())));
    // Columns v, Tv, ..., T^k v; a kernel vector is a polynomial killing v.
    RationalMatrix cols = rows_of(krylov, dimension_).transpose();
    RationalMatrix kernel = nullspace(cols);
    if (kernel.rows() == 0) continue;
    std::vector<Rational> c(kernel.cols());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = kernel(0, k);
    return monic(QLaurent::from_coefficients(0, std::move(c)));
  }
}

QLaurent AlexanderModule::characteristic_polynomial() const {
  Matrix<QLaurent> a(dimension_, dimension_);
  for (std::size_t i = 0; i < dimension_; ++i)
    for (std::size_t j = 0; j < dimension_; ++j) {
      a(i, j) = QLaurent(-t_action_(i, j));
      if (i == j) a(i, j) += QLaurent::t();
    }
  return monic(determinant(a));
}

Submodule Submodule::generated_by(const AlexanderModule& m, const std::vector<QVector>& vectors) {
  const std::size_t n = m.q_dimension();
  std::vector<QVector> span;
  for (const auto& v : vectors) {
    if (v.size() != n) throw InvalidInput("Submodule: vector dimension mismatch");
    QVector w = v;
    for (std::size_t k = 0; k < n; ++k) {
      span.push_back(w);
      w = times_column(m.t_action(), std::span<const Rational>(w));
    }
  }
  Submodule s;
  s.basis_ = span.empty() ? RationalMatrix(0, n) : row_basis(rows_of(span, n));
  return s;
}

Submodule Submodule::from_subspace(const AlexanderModule& m, const RationalMatrix& rows) {
  if (rows.cols() != m.q_dimension()) throw InvalidInput("Submodule: subspace dimension mismatch");
  Submodule s;
  s.basis_ = rows.rows() == 0 ? RationalMatrix(0, m.q_dimension()) : row_basis(rows);
  for (std::size_t i = 0; i < s.basis_.rows(); ++i) {
    const auto image = times_column(m.t_action(), s.basis_.row(i));
    if (!s.contains(image)) throw std::logic_error("subspace is not t-invariant");
  }
  return s;
}

Submodule Submodule::zero(const AlexanderModule& m) { return from_subspace(m, RationalMatrix(0, m.q_dimension())); }

Submodule Submodule::whole(const AlexanderModule& m) {
  return from_subspace(m, RationalMatrix::identity(m.q_dimension()));
}

bool Submodule::contains(std::span<const Rational> v) const {
  if (v.size() != ambient_dimension()) throw InvalidInput("Submodule::contains: dimension mismatch");
  return in_row_space(basis_, v);
}

bool Submodule::contains(const Submodule& other) const {
  for (std::size_t i = 0; i < other.basis_.rows(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

BlanchfieldPairing BlanchfieldPairing::of(const SeifertMatrix& v) {
  const auto inverse = invert_over_fraction_field(alexander_presentation(v));
  const QLaurent t_minus_one = QLaurent::t() - QLaurent(1);
  BlanchfieldPairing bl;
  bl.gram_ = Matrix<RationalFunctionClass>(inverse.rows(), inverse.cols(), RationalFunctionClass());
  for (std::size_t i = 0; i < inverse.rows(); ++i)
    for (std::size_t j = 0; j < inverse.cols(); ++j)
      bl.gram_(i, j) = RationalFunctionClass(t_minus_one * inverse(i, j).numerator(), inverse(i, j).denominator());
  if (!bl.is_hermitian()) throw std::logic_error("Blanchfield gram matrix is not Hermitian");
  return bl;
}

bool BlanchfieldPairing::is_hermitian() const {
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    for (std::size_t j = i; j < gram_.cols(); ++j)
      if (!(gram_(i, j) == gram_(j, i).conjugate())) return false;
  return true;
}

RationalFunctionClass BlanchfieldPairing::pair(std::span<const QLaurent> x, std::span<const QLaurent> y) const {
  if (x.size() != gram_.rows() || y.size() != gram_.cols()) throw InvalidInput("Blanchfield pairing: dimension mismatch");
  // Accumulate over a common denominator before reducing.
  RationalFunction total;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j].is_zero() || gram_(i, j).is_zero()) continue;
      total += RationalFunction(x[i] * y[j].conjugate() * gram_(i, j).numerator(), gram_(i, j).denominator());
    }
  }
  return RationalFunctionClass(total);
}

BlanchfieldPairing blanchfield_gram(const SeifertMatrix& v) { return BlanchfieldPairing::of(v); }

RationalFunctionClass bl_pair(const AlexanderModule& m, const BlanchfieldPairing& bl, std::span<const Rational> x,
                              std::span<const Rational> y) {
  if (x.size() != m.q_dimension() || y.size() != m.q_dimension())
    throw InvalidInput("bl_pair: expected vectors of dimension " + std::to_string(m.q_dimension()));
  const auto lx = m.lift(x);
  const auto ly = m.lift(y);
  return bl.pair(lx, ly);
}

std::vector<Submodule> enumerate_submodules(const AlexanderModule& m) {
  if (!m.primary_decomposition_complete()) throw Unsupported("enumerate_submodules: factorisation unavailable");
  if (!m.is_cyclic()) throw Unsupported("submodule lattice may be infinite; enumeration unsupported");
  const auto& factors = m.factorization().factors;
  std::vector<int> exponents(factors.size(), 0);
  std::vector<Submodule> out;
  while (true) {
    QLaurent h(1);
    for (std::size_t i = 0; i < factors.size(); ++i)
      for (int k = 0; k < exponents[i]; ++k) h = h * factors[i].polynomial;
    out.push_back(Submodule::from_subspace(m, m.polynomial_action(h).transpose()));
    std::size_t pos = 0;
    while (pos < factors.size()) {
      if (++exponents[pos] <= factors[pos].multiplicity) break;
      exponents[pos] = 0;
      ++pos;
    }
    if (pos == factors.size()) break;
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Submodule& a, const Submodule& b) { return a.dimension() < b.dimension(); });
  return out;
}

Submodule orthogonal_complement(const AlexanderModule& m, const BlanchfieldPairing& bl, const Submodule& p) {
  const std::size_t n = m.q_dimension();
  if (p.ambient_dimension() != n) throw InvalidInput("orthogonal_complement: dimension mismatch");
  // values[k][i] = Bl(e_i, p_k)
  std::vector<std::vector<RationalFunctionClass>> values(p.dimension());
  QLaurent common(1);
  std::vector<QLaurent> basis_lifts;
  for (std::size_t i = 0; i < n; ++i) {
    QVector e(n, Rational(0));
    e[i] = 1;
    auto lifted = m.lift(e);
    basis_lifts.insert(basis_lifts.end(), lifted.begin(), lifted.end());
  }
  const std::size_t g = m.source().size();
  for (std::size_t k = 0; k < p.dimension(); ++k) {
    const auto pk = m.lift(p.basis().row(k));
    for (std::size_t i = 0; i < n; ++i) {
      std::span<const QLaurent> ei(basis_lifts.data() + i * g, g);
      auto value = bl.pair(ei, pk);
      if (!value.is_zero()) common = divide_exact(common * value.denominator(), gcd(common, value.denominator()));
      values[k].push_back(std::move(value));
    }
  }
  const int width = common.high_degree();
  RationalMatrix system(p.dimension() * static_cast<std::size_t>(width), n);
  for (std::size_t k = 0; k < p.dimension(); ++k)
    for (std::size_t i = 0; i < n; ++i) {
      const auto& value = values[k][i];
      if (value.is_zero()) continue;
      const QLaurent scaled = value.numerator() * divide_exact(common, value.denominator());
      for (int c = 0; c < width; ++c) system(k * static_cast<std::size_t>(width) + static_cast<std::size_t>(c), i) = scaled.coefficient(c);
    }
  return Submodule::from_subspace(m, nullspace(system));
}

std::vector<Submodule> metabolisers(const AlexanderModule& m, const BlanchfieldPairing& bl) {
  const auto candidates = enumerate_submodules(m);
  std::vector<Submodule> out;
  if (m.q_dimension() % 2 != 0) return out;
  for (const auto& p : candidates)
    if (orthogonal_complement(m, bl, p) == p) out.push_back(p);
  return out;
}

Submodule unique_metaboliser_containing(const AlexanderModule& m, const BlanchfieldPairing& bl,
                                        std::span<const Rational> x) {
  if (x.size() != m.q_dimension()) throw InvalidInput("unique_metaboliser_containing: dimension mismatch");
  if (is_zero_vector(x)) throw InvalidInput("unique_metaboliser_containing: x must be nonzero");
  std::vector<Submodule> containing;
  for (auto& p : metabolisers(m, bl))
    if (p.contains(x)) containing.push_back(std::move(p));
  if (containing.empty()) throw MathError("no metaboliser contains x");
  if (containing.size() > 1) throw MathError("metaboliser not unique");
  return containing.front();
}

Submodule radical(const AlexanderModule& m, const BlanchfieldPairing& bl) {
  return orthogonal_complement(m, bl, Submodule::whole(m));
}

}  // namespace kslice
