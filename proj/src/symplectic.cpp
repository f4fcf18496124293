#include "qsymp/symplectic.hpp"

#include <optional>

namespace qsymp {

SympVector::SympVector(PrimeField field, std::size_t n) : field_(field), coords_(2 * n, 0) {}

SympVector::SympVector(PrimeField field, std::span<const Scalar> coords)
    : field_(field), coords_(coords.size()) {
  if (coords.size() % 2 != 0) throw InvalidArgument("symplectic vector needs an even length");
  for (std::size_t i = 0; i < coords.size(); ++i) coords_[i] = coords[i] % field.order();
}

SympVector::SympVector(PrimeField field, const std::vector<std::int64_t>& coords)
    : field_(field), coords_(coords.size()) {
  if (coords.size() % 2 != 0) throw InvalidArgument("symplectic vector needs an even length");
  for (std::size_t i = 0; i < coords.size(); ++i) coords_[i] = field.reduce(coords[i]);
}

SympVector SympVector::unit_e(PrimeField field, std::size_t n, std::size_t factor) {
  SympVector v(field, n);
  v.coords_.at(2 * factor) = 1;
  return v;
}

SympVector SympVector::unit_f(PrimeField field, std::size_t n, std::size_t factor) {
  SympVector v(field, n);
  v.coords_.at(2 * factor + 1) = 1;
  return v;
}

bool SympVector::is_zero() const {
  for (auto c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

std::size_t SympVector::weight() const {
  std::size_t w = 0;
  for (std::size_t i = 0; i < n(); ++i) w += (x(i) != 0 || z(i) != 0) ? 1 : 0;
  return w;
}

Support SympVector::support() const {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < n(); ++i) {
    if (x(i) != 0 || z(i) != 0) bits |= std::uint64_t{1} << i;
  }
  return {n(), bits};
}

SympVector& SympVector::operator+=(const SympVector& other) {
  if (coords_.size() != other.coords_.size() || !(field_ == other.field_)) {
    throw DimensionMismatch("adding vectors from different ambient spaces");
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = field_.add(coords_[i], other.coords_[i]);
  return *this;
}

SympVector& SympVector::operator-=(const SympVector& other) {
  if (coords_.size() != other.coords_.size() || !(field_ == other.field_)) {
    throw DimensionMismatch("subtracting vectors from different ambient spaces");
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = field_.sub(coords_[i], other.coords_[i]);
  return *this;
}

SympVector SympVector::scaled(Scalar c) const {
  SympVector out = *this;
  for (auto& x : out.coords_) x = field_.mul(x, c);
  return out;
}

SympVector SympVector::project(const Support& support) const {
  if (support.ambient() != n()) throw DimensionMismatch("support and vector lengths differ");
  std::vector<Scalar> out;
  out.reserve(2 * support.size());
  for (auto i : support.indices()) {
    out.push_back(x(i));
    out.push_back(z(i));
  }
  return {field_, std::span<const Scalar>(out)};
}

Scalar form(const SympVector& u, const SympVector& v) {
  if (u.n() != v.n() || !(u.field() == v.field())) {
    throw DimensionMismatch("symplectic form of vectors from different ambient spaces");
  }
  const PrimeField& f = u.field();
  Scalar acc = 0;
  for (std::size_t i = 0; i < u.n(); ++i) {
    acc = f.add(acc, f.sub(f.mul(u.x(i), v.z(i)), f.mul(u.z(i), v.x(i))));
  }
  return acc;
}

Matrix to_matrix(PrimeField field, std::size_t n, std::span<const SympVector> vectors) {
  Matrix m(field, 0, 2 * n);
  for (const auto& v : vectors) {
    if (v.n() != n || !(v.field() == field)) throw DimensionMismatch("vector outside V^n");
    m.append_row(v.coords());
  }
  return m;
}

struct SympSubspace::Cache {
  std::once_flag once;
  SplitDecomposition split;
  std::optional<SympSubspace> radical;
};

SympSubspace::SympSubspace(PrimeField field, std::size_t n)
    : n_(n), basis_(field, 0, 2 * n), cache_(std::make_shared<Cache>()) {}

SympSubspace::SympSubspace(std::size_t n, const Matrix& basis)
    : n_(n), basis_(rref(basis)), cache_(std::make_shared<Cache>()) {
  if (basis.cols() != 2 * n) {
    throw DimensionMismatch("basis has " + std::to_string(basis.cols()) +
                            " columns, expected " + std::to_string(2 * n));
  }
  if (n > kMaxFactors) throw InvalidArgument("at most 64 tensor factors are supported");
}

SympSubspace SympSubspace::span(PrimeField field, std::size_t n,
                                std::span<const SympVector> vectors) {
  return {n, to_matrix(field, n, vectors)};
}

SympSubspace SympSubspace::full(PrimeField field, std::size_t n) {
  return {n, Matrix::identity(field, 2 * n)};
}

SympSubspace SympSubspace::free_on(PrimeField field, const Support& support) {
  const std::size_t n = support.ambient();
  Matrix m(field, 0, 2 * n);
  std::vector<Scalar> row(2 * n, 0);
  for (std::size_t c = 0; c < 2 * n; ++c) {
    if (!support.contains(c / 2)) continue;
    row[c] = 1;
    m.append_row(row);
    row[c] = 0;
  }
  return {n, m};
}

std::vector<SympVector> SympSubspace::basis_vectors() const {
  std::vector<SympVector> out;
  out.reserve(basis_.rows());
  for (std::size_t r = 0; r < basis_.rows(); ++r) out.emplace_back(field(), basis_.row(r));
  return out;
}

bool SympSubspace::contains(const SympVector& v) const {
  if (v.n() != n_ || !(v.field() == field())) return false;
  return row_space_contains(basis_, v.coords());
}

bool SympSubspace::is_subspace_of(const SympSubspace& other) const {
  if (other.n_ != n_ || !(other.field() == field())) {
    throw DimensionMismatch("comparing subspaces of different ambient spaces");
  }
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    if (!row_space_contains(other.basis_, basis_.row(r))) return false;
  }
  return true;
}

bool SympSubspace::is_isotropic() const {
  const auto vs = basis_vectors();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (form(vs[i], vs[j]) != 0) return false;
    }
  }
  return true;
}

namespace {

// Coefficient rows c with sum_i c_i b_i ∈ span(b)^perp, mapped back to vectors.
SympSubspace radical_of_spanning(PrimeField field, std::size_t n,
                                 std::span<const SympVector> spanning) {
  const std::size_t m = spanning.size();
  Matrix gram(field, m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) gram(i, j) = form(spanning[i], spanning[j]);
  }
  const Matrix coeffs = kernel(gram.transpose());
  std::vector<SympVector> vectors;
  for (std::size_t r = 0; r < coeffs.rows(); ++r) {
    SympVector v(field, n);
    for (std::size_t i = 0; i < m; ++i) {
      if (coeffs(r, i) != 0) v += spanning[i].scaled(coeffs(r, i));
    }
    vectors.push_back(std::move(v));
  }
  return SympSubspace::span(field, n, vectors);
}

SplitDecomposition split_with_radical(PrimeField field, std::size_t n,
                                      std::span<const SympVector> spanning,
                                      const SympSubspace& rad) {
  SplitDecomposition out;
  out.radical_basis = rad.basis_vectors();

  // Extend a basis of the radical to the whole space with the earliest spanning vectors.
  Matrix current = rad.basis();
  std::vector<SympVector> rest;
  for (const auto& v : spanning) {
    if (row_space_contains(current, v.coords())) continue;
    current = rref(vstack(current, to_matrix(field, n, std::span(&v, 1))));
    rest.push_back(v);
  }

  // Symplectic Gram-Schmidt on the complement, which is nondegenerate.
  while (!rest.empty()) {
    std::size_t first = rest.size();
    std::size_t second = rest.size();
    for (std::size_t i = 0; i < rest.size() && first == rest.size(); ++i) {
      for (std::size_t j = i + 1; j < rest.size(); ++j) {
        if (form(rest[i], rest[j]) != 0) {
          first = i;
          second = j;
          break;
        }
      }
    }
    if (first == rest.size()) {
      throw std::logic_error("complement of the radical is degenerate");
    }
    SympVector u = rest[first];
    SympVector w = rest[second].scaled(field.inv(form(u, rest[second])));
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(second));
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(first));
    for (auto& v : rest) {
      const Scalar vw = form(v, w);
      const Scalar vu = form(v, u);
      v -= u.scaled(vw);
      v += w.scaled(vu);
    }
    out.pairs.emplace_back(std::move(u), std::move(w));
  }
  return out;
}

}  // namespace

const SplitDecomposition& SympSubspace::split() const {
  std::call_once(cache_->once, [this] {
    const auto vs = basis_vectors();
    cache_->radical.emplace(radical_of_spanning(field(), n_, vs));
    cache_->split = split_with_radical(field(), n_, vs, *cache_->radical);
  });
  return cache_->split;
}

const SympSubspace& SympSubspace::radical() const {
  split();
  return *cache_->radical;
}

SympSubspace perp(const SympSubspace& w) {
  // form(v, b) = v · J b with J b = (z_1(b), -x_1(b), ...).
  const PrimeField& f = w.field();
  Matrix jb(f, w.dim_f(), 2 * w.n());
  for (std::size_t r = 0; r < w.dim_f(); ++r) {
    for (std::size_t i = 0; i < w.n(); ++i) {
      jb(r, 2 * i) = w.basis()(r, 2 * i + 1);
      jb(r, 2 * i + 1) = f.neg(w.basis()(r, 2 * i));
    }
  }
  return {w.n(), kernel(jb)};
}

const SympSubspace& radical(const SympSubspace& w) { return w.radical(); }

SympSubspace intersect(const SympSubspace& a, const SympSubspace& b) {
  if (a.n() != b.n()) throw DimensionMismatch("intersecting subspaces of different ambient spaces");
  return {a.n(), intersect(a.basis(), b.basis())};
}

SympSubspace sum(const SympSubspace& a, const SympSubspace& b) {
  if (a.n() != b.n()) throw DimensionMismatch("adding subspaces of different ambient spaces");
  return {a.n(), sum(a.basis(), b.basis())};
}

SplitDecomposition orthogonal_split(const SympSubspace& w) { return w.split(); }

SplitDecomposition orthogonal_split(PrimeField field, std::size_t n,
                                    std::span<const SympVector> spanning) {
  const SympSubspace rad = radical_of_spanning(field, n, spanning);
  return split_with_radical(field, n, spanning, rad);
}

bool is_stabilizer_subspace(const SympSubspace& w) { return w.isorank() == w.n(); }

bool perp_is_isotropic(const SympSubspace& w) { return perp(w).is_isotropic(); }

}  // namespace qsymp
