#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qsymp/codes.hpp"

namespace qsymp {

/// Seeded generator for reproducible test instances.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

SympVector random_vector(Rng& rng, PrimeField field, std::size_t n);
// Span of a random number (0..2n) of random vectors.
SympSubspace random_subspace(Rng& rng, PrimeField field, std::size_t n);
SympSubspace random_subspace(Rng& rng, PrimeField field, std::size_t n, std::size_t generators);
// Random isotropic subspace of F-dimension `dim_f` (at most n).
SympSubspace random_isotropic(Rng& rng, PrimeField field, std::size_t n, std::size_t dim_f);
// S^perp for a random isotropic S of random dimension.
Code random_stabilizer_code(Rng& rng, PrimeField field, std::size_t n);

// Every subspace of V^n, sorted by canonical basis. Only for tiny q^{2n}.
std::vector<SympSubspace> all_subspaces(PrimeField field, std::size_t n);

}  // namespace qsymp
