#include "qsymp/random.hpp"

#include <algorithm>
#include <set>

namespace qsymp {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("empty range");
  return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(engine_);
}

SympVector random_vector(Rng& rng, PrimeField field, std::size_t n) {
  std::vector<Scalar> coords(2 * n);
  for (auto& c : coords) c = static_cast<Scalar>(rng.below(field.order()));
  return SympVector(field, std::span<const Scalar>(coords));
}

SympSubspace random_subspace(Rng& rng, PrimeField field, std::size_t n) {
  return random_subspace(rng, field, n, rng.between(0, 2 * n));
}

SympSubspace random_subspace(Rng& rng, PrimeField field, std::size_t n, std::size_t generators) {
  std::vector<SympVector> vs;
  for (std::size_t i = 0; i < generators; ++i) vs.push_back(random_vector(rng, field, n));
  return SympSubspace::span(field, n, vs);
}

SympSubspace random_isotropic(Rng& rng, PrimeField field, std::size_t n, std::size_t dim_f) {
  if (dim_f > n) throw InvalidArgument("isotropic subspaces have dimension at most n");
  SympSubspace s(field, n);
  while (s.dim_f() < dim_f) {
    // Random element of S^perp; S + <v> stays isotropic.
    const auto perp_basis = perp(s).basis_vectors();
    SympVector v(field, n);
    for (const auto& b : perp_basis) v += b.scaled(static_cast<Scalar>(rng.below(field.order())));
    if (s.contains(v)) continue;
    std::vector<SympVector> gens = s.basis_vectors();
    gens.push_back(v);
    s = SympSubspace::span(field, n, gens);
  }
  return s;
}

Code random_stabilizer_code(Rng& rng, PrimeField field, std::size_t n) {
  return stabilizer_code_from_isotropic(random_isotropic(rng, field, n, rng.between(0, n)));
}

std::vector<SympSubspace> all_subspaces(PrimeField field, std::size_t n) {
  // Breadth-first: extend each known subspace by every vector outside it.
  std::size_t total = 1;
  for (std::size_t i = 0; i < 2 * n; ++i) total *= field.order();
  std::vector<SympVector> vectors;
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::vector<Scalar> coords(2 * n);
    std::size_t r = idx;
    for (auto& c : coords) {
      c = static_cast<Scalar>(r % field.order());
      r /= field.order();
    }
    vectors.emplace_back(field, std::span<const Scalar>(coords));
  }
  auto key = [](const SympSubspace& w) { return w.basis().to_rows(); };
  std::set<std::vector<std::vector<std::int64_t>>> seen;
  std::vector<SympSubspace> out{SympSubspace(field, n)};
  seen.insert(key(out.front()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& v : vectors) {
      if (out[i].contains(v)) continue;
      auto gens = out[i].basis_vectors();
      gens.push_back(v);
      SympSubspace next = SympSubspace::span(field, n, gens);
      if (seen.insert(key(next)).second) out.push_back(std::move(next));
    }
  }
  std::sort(out.begin(), out.end(),
            [&](const SympSubspace& a, const SympSubspace& b) { return key(a) < key(b); });
  return out;
}

}  // namespace qsymp
