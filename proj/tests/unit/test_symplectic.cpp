#include <gtest/gtest.h>

#include <algorithm>
#include <thread>

#include "qsymp/io.hpp"
#include "qsymp/random.hpp"
#include "qsymp/symplectic.hpp"

using namespace qsymp;

namespace {

const PrimeField F2(2);
const PrimeField F3(3);

SympVector vec(PrimeField f, std::vector<std::int64_t> coords) { return SympVector(f, coords); }

SympSubspace span_of(PrimeField f, std::size_t n, const std::vector<SympVector>& vs) {
  return SympSubspace::span(f, n, vs);
}

// (e,e), (f,f), (f,0) in V^2.
SympSubspace repetition_space() {
  return span_of(F2, 2, {vec(F2, {1, 0, 1, 0}), vec(F2, {0, 1, 0, 1}), vec(F2, {0, 1, 0, 0})});
}

// r = XXII, s = ZIZI, t = IIXX, u = IZIZ.
SympSubspace bacon_shor_space() {
  return span_of(F2, 4, {vec(F2, {1, 0, 1, 0, 0, 0, 0, 0}), vec(F2, {0, 1, 0, 0, 0, 1, 0, 0}),
                         vec(F2, {0, 0, 0, 0, 1, 0, 1, 0}), vec(F2, {0, 0, 0, 1, 0, 0, 0, 1})});
}

}  // namespace

TEST(Form, DefiningRelation) {
  for (Scalar q : {2u, 3u, 5u, 7u}) {
    const PrimeField f(q);
    EXPECT_EQ(form(SympVector::unit_e(f, 3, 1), SympVector::unit_f(f, 3, 1)), 1u);
    EXPECT_EQ(form(SympVector::unit_f(f, 3, 1), SympVector::unit_e(f, 3, 1)), q - 1);
    EXPECT_EQ(form(SympVector::unit_e(f, 3, 0), SympVector::unit_f(f, 3, 1)), 0u);
  }
}

TEST(Form, CharacteristicTwo) {
  EXPECT_EQ(form(vec(F2, {1, 0, 1, 0}), vec(F2, {0, 1, 0, 1})), 0u);
  EXPECT_EQ(form(vec(F2, {1, 0, 1, 0}), vec(F2, {0, 1, 0, 0})), 1u);
  EXPECT_EQ(form(vec(F3, {1, 0, 1, 0}), vec(F3, {0, 1, 0, 1})), 2u);
}

TEST(Form, AlternatingAndBilinear) {
  Rng rng(21);
  for (Scalar q : {2u, 3u, 5u}) {
    const PrimeField f(q);
    for (int t = 0; t < 50; ++t) {
      const auto u = random_vector(rng, f, 3);
      const auto v = random_vector(rng, f, 3);
      const auto w = random_vector(rng, f, 3);
      const Scalar c = static_cast<Scalar>(rng.below(q));
      EXPECT_EQ(form(u, u), 0u);
      EXPECT_EQ(form(u, v), f.neg(form(v, u)));
      EXPECT_EQ(form(u.scaled(c) + w, v), f.add(f.mul(c, form(u, v)), form(w, v)));
    }
  }
}

TEST(SympVector, WeightAndSupport) {
  const auto v = vec(F3, {0, 0, 2, 1, 0, 0, 1, 0});
  EXPECT_EQ(v.weight(), 2u);
  EXPECT_EQ(v.support().indices(), (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(v.project(v.support()), vec(F3, {2, 1, 1, 0}));
  EXPECT_THROW(SympVector(F2, std::vector<std::int64_t>{1, 0, 1}), InvalidArgument);
}

TEST(Perp, RepetitionCode) {
  EXPECT_EQ(perp(repetition_space()), span_of(F2, 2, {vec(F2, {0, 1, 0, 1})}));
}

TEST(Perp, FullAndZero) {
  EXPECT_TRUE(perp(SympSubspace::full(F3, 3)).is_zero());
  EXPECT_EQ(perp(SympSubspace(F3, 3)), SympSubspace::full(F3, 3));
}

TEST(Perp, DoubleComplement) {
  Rng rng(22);
  for (int t = 0; t < 100; ++t) {
    const auto w = random_subspace(rng, F3, rng.between(1, 3));
    EXPECT_EQ(perp(perp(w)), w);
    EXPECT_EQ(perp(w).dim_f(), 2 * w.n() - w.dim_f());
  }
}

TEST(Radical, RepetitionExample) {
  const auto w = repetition_space();
  EXPECT_EQ(w.radical(), span_of(F2, 2, {vec(F2, {0, 1, 0, 1})}));
  EXPECT_TRUE(w.radical().is_isotropic());
}

TEST(Radical, SymplecticHasNone) {
  const auto w = span_of(F3, 2, {SympVector::unit_e(F3, 2, 0), SympVector::unit_f(F3, 2, 0)});
  EXPECT_TRUE(w.radical().is_zero());
}

TEST(Radical, BaconShorExample) {
  const auto w = bacon_shor_space();
  // r + t = XXXX, s + u = ZZZZ.
  EXPECT_EQ(w.radical(), span_of(F2, 4, {vec(F2, {1, 0, 1, 0, 1, 0, 1, 0}),
                                         vec(F2, {0, 1, 0, 1, 0, 1, 0, 1})}));
}

TEST(Split, RepetitionExample) {
  const auto s = repetition_space().split();
  ASSERT_EQ(s.pairs.size(), 1u);
  EXPECT_EQ(form(s.pairs[0].first, s.pairs[0].second), 1u);
  ASSERT_EQ(s.radical_basis.size(), 1u);
  EXPECT_EQ(s.radical_basis[0], vec(F2, {0, 1, 0, 1}));
  EXPECT_EQ(repetition_space().isorank(), 2u);
}

TEST(Split, ZeroSubspace) {
  const SympSubspace z(F3, 4);
  EXPECT_TRUE(z.split().pairs.empty());
  EXPECT_TRUE(z.split().radical_basis.empty());
  EXPECT_EQ(z.sym_dim(), 0u);
  EXPECT_EQ(z.isorank(), 0u);
  EXPECT_TRUE(z.radical().is_zero());
}

TEST(Split, BaconShorExample) {
  const auto w = bacon_shor_space();
  EXPECT_EQ(w.split().pairs.size(), 1u);
  EXPECT_EQ(w.split().radical_basis.size(), 2u);
  EXPECT_EQ(w.sym_dim(), 1u);
  EXPECT_EQ(w.isorank(), 3u);
}

TEST(Split, FullSpace) {
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto v = SympSubspace::full(F3, n);
    EXPECT_EQ(v.sym_dim(), n);
    EXPECT_EQ(v.isorank(), n);
  }
}

TEST(Split, InvariantsOnRandomSubspaces) {
  Rng rng(23);
  for (Scalar q : {2u, 3u, 5u}) {
    const PrimeField f(q);
    for (int t = 0; t < 60; ++t) {
      const auto w = random_subspace(rng, f, rng.between(1, 4));
      const auto& s = w.split();
      std::vector<SympVector> all = s.radical_basis;
      for (const auto& [a, b] : s.pairs) {
        EXPECT_EQ(form(a, b), 1u);
        all.push_back(a);
        all.push_back(b);
      }
      for (std::size_t i = 0; i < s.pairs.size(); ++i) {
        for (std::size_t j = i + 1; j < s.pairs.size(); ++j) {
          EXPECT_EQ(form(s.pairs[i].first, s.pairs[j].first), 0u);
          EXPECT_EQ(form(s.pairs[i].first, s.pairs[j].second), 0u);
          EXPECT_EQ(form(s.pairs[i].second, s.pairs[j].first), 0u);
          EXPECT_EQ(form(s.pairs[i].second, s.pairs[j].second), 0u);
        }
      }
      for (const auto& r : s.radical_basis) {
        for (const auto& x : all) EXPECT_EQ(form(r, x), 0u);
      }
      EXPECT_EQ(all.size(), w.dim_f());
      EXPECT_EQ(span_of(f, w.n(), all), w);
      EXPECT_EQ(w.dim_f(), w.sym_dim() + w.isorank());
    }
  }
}

TEST(Split, IndependentOfSpanningList) {
  Rng rng(24);
  for (int t = 0; t < 60; ++t) {
    const PrimeField f(t % 2 ? 3 : 2);
    const auto w = random_subspace(rng, f, rng.between(1, 4));
    // Random combinations, some redundant, in shuffled order.
    std::vector<SympVector> spanning = w.basis_vectors();
    for (std::size_t i = 0; i < 3 && !spanning.empty(); ++i) {
      SympVector extra(f, w.n());
      for (const auto& b : w.basis_vectors()) extra += b.scaled(static_cast<Scalar>(rng.below(f.order())));
      spanning.push_back(extra);
      spanning[rng.below(spanning.size())] += extra;
    }
    std::shuffle(spanning.begin(), spanning.end(), rng.engine());
    if (span_of(f, w.n(), spanning) != w) continue;
    const auto other = orthogonal_split(f, w.n(), spanning);
    EXPECT_EQ(other.pairs.size(), w.sym_dim());
    EXPECT_EQ(other.radical_basis.size() + other.pairs.size(), w.isorank());
  }
}

TEST(Stabilizer, Examples) {
  EXPECT_TRUE(is_stabilizer_subspace(repetition_space()));
  EXPECT_FALSE(is_stabilizer_subspace(bacon_shor_space()));
  // A maximal isotropic subspace: span{f_1, ..., f_n}.
  std::vector<SympVector> fs;
  for (std::size_t i = 0; i < 3; ++i) fs.push_back(SympVector::unit_f(F3, 3, i));
  EXPECT_TRUE(is_stabilizer_subspace(span_of(F3, 3, fs)));
}

TEST(Stabilizer, BothTestsAgree) {
  Rng rng(25);
  for (int t = 0; t < 150; ++t) {
    const auto w = random_subspace(rng, t % 2 ? F3 : F2, rng.between(1, 3));
    EXPECT_EQ(is_stabilizer_subspace(w), perp_is_isotropic(w));
    // Stabilizer theorem: rad(W) <= W^perp, with equality iff W is a stabilizer subspace.
    EXPECT_TRUE(w.radical().is_subspace_of(perp(w)));
    EXPECT_EQ(w.radical() == perp(w), is_stabilizer_subspace(w));
  }
}

TEST(Identities, DualityAndRadicalOfPerp) {
  Rng rng(26);
  for (Scalar q : {2u, 3u, 5u}) {
    const PrimeField f(q);
    for (int t = 0; t < 60; ++t) {
      const auto w = random_subspace(rng, f, rng.between(1, 4));
      const auto wp = perp(w);
      EXPECT_EQ(wp.sym_dim() + w.isorank(), w.n());
      EXPECT_EQ(wp.isorank() + w.sym_dim(), w.n());
      EXPECT_EQ(wp.radical(), w.radical());
      EXPECT_EQ(intersect(w, wp), w.radical());
    }
  }
}

TEST(Identities, MonotoneOnNestedPairs) {
  Rng rng(27);
  for (int t = 0; t < 100; ++t) {
    const PrimeField f(t % 2 ? 3 : 2);
    const std::size_t n = rng.between(1, 4);
    const auto big = random_subspace(rng, f, n);
    auto gens = big.basis_vectors();
    std::shuffle(gens.begin(), gens.end(), rng.engine());
    gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(rng.between(0, gens.size())), gens.end());
    const auto small = span_of(f, n, gens);
    ASSERT_TRUE(small.is_subspace_of(big));
    EXPECT_LE(small.sym_dim(), big.sym_dim());
    EXPECT_LE(small.isorank(), big.isorank());
  }
}

TEST(Identities, ModularForOrthogonalPairs) {
  Rng rng(28);
  int tested = 0;
  for (int t = 0; t < 200; ++t) {
    const PrimeField f(t % 2 ? 3 : 2);
    const std::size_t n = rng.between(1, 4);
    const auto a = random_subspace(rng, f, n);
    // b inside a^perp, possibly meeting a.
    const auto b = intersect(perp(a), random_subspace(rng, f, n, rng.between(2, 2 * n)));
    ++tested;
    const auto s = sum(a, b);
    const auto i = intersect(a, b);
    EXPECT_EQ(s.sym_dim() + i.sym_dim(), a.sym_dim() + b.sym_dim());
    EXPECT_EQ(s.isorank() + i.isorank(), a.isorank() + b.isorank());
    EXPECT_EQ(s.dim_f() + i.dim_f(), a.dim_f() + b.dim_f());
  }
  EXPECT_EQ(tested, 200);
}

// dim is not supermodular and irk not submodular for arbitrary pairs.
TEST(Identities, SupermodularityCounterexample) {
  for (Scalar q : {2u, 3u}) {
    const PrimeField f(q);
    const auto ff = vec(f, {0, 1, 0, 1});
    const auto w1 = span_of(f, 2, {SympVector::unit_e(f, 2, 0), ff});
    const auto w2 = span_of(f, 2, {SympVector::unit_e(f, 2, 1), ff});
    const auto s = sum(w1, w2);
    const auto i = intersect(w1, w2);
    EXPECT_EQ(w1.sym_dim(), 1u);
    EXPECT_EQ(w2.sym_dim(), 1u);
    EXPECT_EQ(i, span_of(f, 2, {ff}));
    EXPECT_EQ(s.sym_dim() + i.sym_dim(), 1u);
    EXPECT_EQ(s.isorank() + i.isorank(), 3u);
    EXPECT_EQ(w1.isorank() + w2.isorank(), 2u);
  }
}

TEST(Subspace, ConcurrentCacheFill) {
  const auto w = bacon_shor_space();
  std::vector<std::thread> threads;
  std::vector<std::size_t> dims(8);
  for (std::size_t i = 0; i < dims.size(); ++i) {
    threads.emplace_back([&, i] {
      const SympSubspace copy = w;
      dims[i] = copy.sym_dim() * 10 + copy.isorank();
    });
  }
  for (auto& t : threads) t.join();
  for (auto d : dims) EXPECT_EQ(d, 13u);
}

TEST(Subspace, JsonRoundTrip) {
  const auto w = bacon_shor_space();
  const Json j = to_json(w);
  EXPECT_EQ(j["q"], 2);
  EXPECT_EQ(j["n"], 4);
  EXPECT_EQ(subspace_from_json(j), w);
  EXPECT_THROW(subspace_from_json(Json::parse(R"({"q": 4, "n": 1, "basis": []})")), ParseError);
  EXPECT_THROW(subspace_from_json(Json::parse(R"({"q": 2, "n": 1, "basis": [[1]]})")), ParseError);
  EXPECT_THROW(subspace_from_json(Json::parse(R"({"n": 1})")), ParseError);
}

TEST(Subspace, MismatchedAmbientThrows) {
  EXPECT_THROW(sum(SympSubspace(F2, 2), SympSubspace(F2, 3)), DimensionMismatch);
  EXPECT_THROW(form(SympVector(F2, 2), SympVector(F2, 3)), DimensionMismatch);
}
