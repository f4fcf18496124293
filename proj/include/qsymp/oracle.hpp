#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qsymp/field.hpp"

// Brute-force reference computations. Nothing here touches the matrix or
// subspace code: spans are enumerated as sets, intersections are membership
// filters, and dimensions are read off set sizes.
namespace qsymp::oracle {

using Coords = std::vector<Scalar>;  // interleaved (x_1, z_1, ..., x_n, z_n)
using Mask = std::uint64_t;

/// All q^m combinations of m generators, in mixed-radix counter order.
class CodewordIterator {
 public:
  CodewordIterator(PrimeField field, std::size_t n, std::vector<Coords> generators,
                   std::uint64_t budget);

  bool done() const { return done_; }
  const Coords& current() const { return current_; }
  void next();
  std::uint64_t count() const { return count_; }

 private:
  PrimeField field_;
  std::vector<Coords> generators_;
  std::vector<Scalar> digits_;
  Coords current_;
  bool done_ = false;
  std::uint64_t count_ = 1;
  std::uint64_t budget_;
};

/// A subspace given by a (possibly dependent) generating list.
struct Instance {
  PrimeField field;
  std::size_t n = 0;
  std::vector<Coords> generators;
};

// Sorted distinct elements of the span.
std::vector<Coords> enumerate(const Instance& w, std::uint64_t budget);
bool contains(const std::vector<Coords>& sorted, const Coords& v);

Scalar form(const PrimeField& f, const Coords& u, const Coords& v);
std::size_t weight(const Coords& v);
Mask support(const Coords& v);

// { v ∈ F^{2n} : form(v, g) = 0 for every generator }, by scanning all q^{2n} vectors.
std::vector<Coords> perp(const Instance& w, std::uint64_t budget);
// Elements of `elements` orthogonal to every element of it.
std::vector<Coords> radical(const PrimeField& f, const std::vector<Coords>& elements);

// log_q |set|; throws if |set| is not a power of q.
std::size_t log_q(const PrimeField& f, std::size_t size);

struct Dims {
  std::size_t dim_f = 0;
  std::size_t sym_dim = 0;
  std::size_t isorank = 0;
};
// From |W| and |rad(W)|: dim = (dim_F W - dim_F rad)/2, irk = (dim_F W + dim_F rad)/2.
Dims dims(const PrimeField& f, const std::vector<Coords>& elements);

struct Params {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t s = 0;
  std::optional<std::size_t> d;
  std::size_t maxwt = 0;
};
Params params(const Instance& code, std::uint64_t budget);
std::optional<std::size_t> min_distance(const Instance& code, std::uint64_t budget);

// W_a and B_b by scanning codewords and supports.
std::vector<std::int64_t> distribution(const Instance& w, std::uint64_t budget);
std::vector<std::int64_t> moments(const Instance& w, std::uint64_t budget);

// Elements with support inside `mask`.
std::vector<Coords> restrict_to(const std::vector<Coords>& elements, Mask mask);
// alpha = dim(C ∩ A_J), beta = irk(C ∩ A_J) - irk(rad(C) ∩ A_J).
struct AlphaBeta {
  std::size_t alpha = 0;
  std::size_t beta = 0;
};
// `rad` is radical(f, code), passed in so support scans compute it once.
AlphaBeta alpha_beta(const PrimeField& f, const std::vector<Coords>& code,
                     const std::vector<Coords>& rad, Mask mask);

// Projections onto the factors of `mask` (as sorted sets over F^{2|J|}).
std::vector<Coords> project(const std::vector<Coords>& elements, Mask mask);
std::vector<Coords> puncture(const std::vector<Coords>& code, Mask mask);
std::vector<Coords> shorten(const std::vector<Coords>& code, Mask mask);

}  // namespace qsymp::oracle
