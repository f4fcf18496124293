#include <gtest/gtest.h>

#include "qsymp/enumerators.hpp"
#include "qsymp/random.hpp"
#include "qsymp/suites.hpp"

using namespace qsymp;

namespace {

using Counts = std::vector<std::int64_t>;

std::string failures(const Report& r) {
  std::string out;
  for (const auto& c : r.checks) {
    if (c.pass == false) out += c.identity + " [" + c.instance + "] " + c.note + "\n";
  }
  return out;
}

// A random code whose radical is zero: a span of random symplectic pairs.
SympSubspace random_symplectic(Rng& rng, PrimeField f, std::size_t n) {
  for (;;) {
    const auto w = random_subspace(rng, f, n, 2 * rng.between(0, n));
    if (w.radical().is_zero()) return w;
  }
}

}  // namespace

TEST(Distribution, Repetition) {
  const Code c = fixtures::repetition();
  EXPECT_EQ(weight_distribution(c.space()).counts, (Counts{1, 2, 5}));
  // rad(C) = span{(f,f)} has two elements.
  EXPECT_EQ(weight_distribution(c.radical()).counts, (Counts{1, 0, 1}));
}

TEST(Distribution, ZeroCode) {
  EXPECT_EQ(weight_distribution(SympSubspace(PrimeField(3), 3)).counts, (Counts{1, 0, 0, 0}));
}

TEST(Moments, Repetition) {
  const Code c = fixtures::repetition();
  EXPECT_EQ(binomial_moments(c.space()).counts, (Counts{1, 4, 8}));
  // |C^perp ∩ A_{1}| = |C^perp ∩ A_{2}| = 1.
  EXPECT_EQ(binomial_moments(perp(c.space())).counts, (Counts{1, 2, 2}));
}

TEST(Moments, ZeroCode) {
  // Every anticode meets the zero code in one point, so B_b = C(n, b).
  EXPECT_EQ(binomial_moments(SympSubspace(PrimeField(2), 4)).counts, (Counts{1, 4, 6, 4, 1}));
}

TEST(Transforms, RepetitionTables) {
  EXPECT_EQ(moments_from_distribution({{1, 2, 5}}).counts, (Counts{1, 4, 8}));
  EXPECT_EQ(distribution_from_moments({{1, 4, 8}}).counts, (Counts{1, 2, 5}));
  EXPECT_EQ(moments_from_distribution({{1, 0, 0, 0}}).counts, (Counts{1, 3, 3, 1}));
  EXPECT_EQ(distribution_from_moments({{1, 3, 3, 1}}).counts, (Counts{1, 0, 0, 0}));
}

TEST(Transforms, MutuallyInverseOnRandomTables) {
  Rng rng(61);
  for (int t = 0; t < 100; ++t) {
    Counts w(rng.between(1, 8));
    for (auto& x : w) x = static_cast<std::int64_t>(rng.below(1000));
    EXPECT_EQ(distribution_from_moments(moments_from_distribution({w})).counts, w);
    EXPECT_EQ(moments_from_distribution(distribution_from_moments({w})).counts, w);
  }
}

TEST(Polys, Repetition) {
  const EnumeratorPair p = enumerator_polys(fixtures::repetition());
  EXPECT_EQ(p.b.to_string(), "y^2 + 2xy + 5x^2");
  EXPECT_EQ(p.a.to_string(), "y^2 + x^2");
  EXPECT_EQ(b_poly_from_moments({{1, 4, 8}}), p.b);
}

TEST(Polys, ZeroCode) {
  const EnumeratorPair p = enumerator_polys(Code(SympSubspace(PrimeField(3), 3)));
  EXPECT_EQ(p.a.to_string(), "y^3");
  EXPECT_EQ(p.b.to_string(), "y^3");
}

TEST(Polys, ShorCardinalities) {
  const EnumeratorPair p = enumerator_polys(fixtures::shor());
  EXPECT_EQ(p.a.evaluate(1, 1), 256);
  EXPECT_EQ(p.b.evaluate(1, 1), 1024);
}

TEST(Polys, Printing) {
  EXPECT_EQ(EnumeratorPoly({1, -2, 0, 3}).to_string(), "y^3 - 2xy^2 + 3x^3");
  EXPECT_EQ(EnumeratorPoly({0, 0, -1}).to_string(), "-x^2");
  EXPECT_EQ(EnumeratorPoly({0, 0}).to_string(), "0");
  EXPECT_EQ(EnumeratorPoly({4}).to_string(), "4");
  EXPECT_EQ(EnumeratorPoly({0, 1, 0, 0}).to_string(), "xy^2");
}

TEST(Polys, BothRoutesAgree) {
  Rng rng(62);
  for (int t = 0; t < 100; ++t) {
    const PrimeField f(t % 3 == 0 ? 5 : (t % 2 ? 3 : 2));
    const Code c(random_subspace(rng, f, rng.between(1, 4)));
    const EnumeratorPair p = enumerator_polys(c);
    EXPECT_EQ(b_poly_from_moments(binomial_moments(c.space())), p.b);
  }
}

TEST(Distance, FromEnumerators) {
  const EnumeratorPair rep = enumerator_polys(fixtures::repetition());
  EXPECT_EQ(distance_from_enumerators(rep.a, rep.b), std::optional<std::size_t>(1));
  EXPECT_EQ(distance_from_enumerators(rep.a, rep.a), std::nullopt);
  const EnumeratorPair shor = enumerator_polys(fixtures::shor());
  EXPECT_EQ(distance_from_enumerators(shor.a, shor.b), std::optional<std::size_t>(3));
  EXPECT_THROW(distance_from_enumerators(EnumeratorPoly({1}), EnumeratorPoly({1, 0})),
               DimensionMismatch);
}

TEST(MacWilliams, RepetitionAtOne) {
  const Report r = macwilliams_check(fixtures::repetition());
  EXPECT_TRUE(r.ok()) << failures(r);
  bool seen = false;
  for (const auto& c : r.checks) {
    if (c.identity == "macwilliams:aggregate" && c.instance == "b=1") {
      seen = true;
      // B_1(C^perp) q^{dim_F C} = 2 * 8 and q^2 B_1(C) = 4 * 4.
      EXPECT_EQ(c.lhs, 16);
      EXPECT_EQ(c.rhs, 16);
    }
    // rad(C) != 0, so the 2(b - k) form does not apply.
    if (c.identity == "macwilliams:exponent-2(b-k)") EXPECT_FALSE(c.pass.has_value());
  }
  EXPECT_TRUE(seen);
}

TEST(MacWilliams, ExponentFormHoldsWithoutRadical) {
  Rng rng(63);
  for (int t = 0; t < 40; ++t) {
    const PrimeField f(t % 2 ? 3 : 2);
    const Code c(random_symplectic(rng, f, rng.between(1, 3)));
    const Report r = macwilliams_check(c);
    EXPECT_TRUE(r.ok()) << failures(r);
    for (const auto& check : r.checks) {
      if (check.identity == "macwilliams:exponent-2(b-k)") EXPECT_EQ(check.pass, true);
    }
  }
}

TEST(MacWilliams, RandomCodes) {
  Rng rng(64);
  for (int t = 0; t < 100; ++t) {
    const PrimeField f(t % 3 == 0 ? 5 : (t % 2 ? 3 : 2));
    const Code c(random_subspace(rng, f, rng.between(1, 4)));
    EXPECT_TRUE(macwilliams_check(c).ok());
  }
}

TEST(Suite, MoebiusPairsExhaustiveSmall) {
  Rng rng(65);
  for (int t = 0; t < 60; ++t) {
    const Code c(random_subspace(rng, PrimeField(2), rng.between(1, 4)));
    const Report r = enumerator_suite(c, kDefaultBudget);
    EXPECT_TRUE(r.ok()) << failures(r);
  }
  for (const Code& c : {fixtures::repetition(), fixtures::bacon_shor(), fixtures::shor()}) {
    const Report r = enumerator_suite(c, kDefaultBudget);
    EXPECT_TRUE(r.ok()) << failures(r);
  }
}
