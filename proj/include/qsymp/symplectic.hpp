#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "qsymp/field.hpp"
#include "qsymp/matrix.hpp"
#include "qsymp/support.hpp"

namespace qsymp {

/// An element of V^n with V = span{e, f}, stored as (x_1, z_1, ..., x_n, z_n):
/// factor i holds x_i e + z_i f.
class SympVector {
 public:
  SympVector(PrimeField field, std::size_t n);
  // coords.size() must be even; entries are reduced modulo q.
  SympVector(PrimeField field, std::span<const Scalar> coords);
  SympVector(PrimeField field, const std::vector<std::int64_t>& coords);

  static SympVector unit_e(PrimeField field, std::size_t n, std::size_t factor);
  static SympVector unit_f(PrimeField field, std::size_t n, std::size_t factor);

  const PrimeField& field() const { return field_; }
  std::size_t n() const { return coords_.size() / 2; }
  Scalar x(std::size_t i) const { return coords_[2 * i]; }
  Scalar z(std::size_t i) const { return coords_[2 * i + 1]; }
  std::span<const Scalar> coords() const { return coords_; }

  bool is_zero() const;
  // Number of factors with (x_i, z_i) != (0, 0).
  std::size_t weight() const;
  Support support() const;

  SympVector& operator+=(const SympVector& other);
  SympVector& operator-=(const SympVector& other);
  SympVector scaled(Scalar c) const;
  friend SympVector operator+(SympVector a, const SympVector& b) { return a += b; }
  friend SympVector operator-(SympVector a, const SympVector& b) { return a -= b; }

  // Keeps the factors of `support` in increasing order: the projection pi_J.
  SympVector project(const Support& support) const;

  friend bool operator==(const SympVector& a, const SympVector& b) {
    return a.field_ == b.field_ && a.coords_ == b.coords_;
  }
  friend bool operator<(const SympVector& a, const SympVector& b) { return a.coords_ < b.coords_; }

 private:
  PrimeField field_;
  std::vector<Scalar> coords_;
};

// sum_i x_i(u) z_i(v) - z_i(u) x_i(v)
Scalar form(const SympVector& u, const SympVector& v);

/// Orthogonal splitting W = rad(W) ⊕ K with K given as symplectic pairs (e_i, f_i),
/// form(e_i, f_i) = 1 and distinct pairs mutually orthogonal.
struct SplitDecomposition {
  std::vector<SympVector> radical_basis;
  std::vector<std::pair<SympVector, SympVector>> pairs;
};

/// An F_q-subspace of V^n, held as its canonical (rref) basis.
class SympSubspace {
 public:
  // The zero subspace.
  SympSubspace(PrimeField field, std::size_t n);
  // basis.cols() must be 2n; the matrix is canonicalized.
  SympSubspace(std::size_t n, const Matrix& basis);

  static SympSubspace span(PrimeField field, std::size_t n, std::span<const SympVector> vectors);
  static SympSubspace full(PrimeField field, std::size_t n);
  // The free code { v : v_j = 0 for j outside the support }.
  static SympSubspace free_on(PrimeField field, const Support& support);

  const PrimeField& field() const { return basis_.field(); }
  std::size_t n() const { return n_; }
  const Matrix& basis() const { return basis_; }
  std::vector<SympVector> basis_vectors() const;

  std::size_t dim_f() const { return basis_.rows(); }
  bool is_zero() const { return basis_.rows() == 0; }
  bool contains(const SympVector& v) const;
  bool is_subspace_of(const SympSubspace& other) const;
  bool is_isotropic() const;

  // Split, radical, dim and irk are computed once and shared between copies.
  const SplitDecomposition& split() const;
  const SympSubspace& radical() const;
  std::size_t sym_dim() const { return split().pairs.size(); }
  std::size_t isorank() const { return sym_dim() + split().radical_basis.size(); }

  friend bool operator==(const SympSubspace& a, const SympSubspace& b) {
    return a.n_ == b.n_ && a.basis_ == b.basis_;
  }

 private:
  struct Cache;

  std::size_t n_;
  Matrix basis_;
  std::shared_ptr<Cache> cache_;
};

SympSubspace perp(const SympSubspace& w);
// W ∩ W^perp, obtained from the kernel of the Gram matrix of W.
const SympSubspace& radical(const SympSubspace& w);
SympSubspace intersect(const SympSubspace& a, const SympSubspace& b);
SympSubspace sum(const SympSubspace& a, const SympSubspace& b);

// Deterministic splitting of the canonical basis.
SplitDecomposition orthogonal_split(const SympSubspace& w);
// Splitting computed from an arbitrary spanning list (used to check basis independence).
SplitDecomposition orthogonal_split(PrimeField field, std::size_t n,
                                    std::span<const SympVector> spanning);

inline std::size_t sym_dim(const SympSubspace& w) { return w.sym_dim(); }
inline std::size_t isorank(const SympSubspace& w) { return w.isorank(); }

// irk(W) = n.
bool is_stabilizer_subspace(const SympSubspace& w);
// Equivalent characterization: W^perp is isotropic.
bool perp_is_isotropic(const SympSubspace& w);

// Interleaved coordinate rows of the vectors.
Matrix to_matrix(PrimeField field, std::size_t n, std::span<const SympVector> vectors);

}  // namespace qsymp
