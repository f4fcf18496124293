#include <gtest/gtest.h>

#include "qsymp/anticodes.hpp"
#include "qsymp/random.hpp"

using namespace qsymp;

namespace {

const PrimeField F2(2);

std::string failures(const Report& r) {
  std::string out;
  for (const auto& c : r.checks) {
    if (c.pass == false) out += c.identity + " " + c.instance + " " + c.note + "\n";
  }
  return out;
}

void expect_all_supports_clean(const Code& code, std::span<const SympVector> spanning = {}) {
  const auto d = min_distance(code);
  for_each_support(code.n(), [&](const Support& j) {
    const Anticode a(j);
    const Report r = verify_cleaning(code, a, d);
    EXPECT_TRUE(r.ok()) << failures(r);
    const Report c = complementarity_check(code, a, spanning);
    EXPECT_TRUE(c.ok()) << failures(c);
    return true;
  });
}

}  // namespace

TEST(Anticode, FreeCodeInvariants) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for_each_support(n, [&](const Support& j) {
      const Anticode a(j);
      const SympSubspace w = a.realize(PrimeField(3));
      EXPECT_EQ(w.sym_dim(), a.dim());
      EXPECT_EQ(w.isorank(), a.dim());
      EXPECT_EQ(max_weight(Code(w)), a.dim());
      EXPECT_EQ(perp(w), a.complement().realize(PrimeField(3)));
      return true;
    });
  }
}

TEST(Anticode, LatticeOperations) {
  const Anticode a = anticode(4, {0, 1});
  const Anticode b = anticode(4, {1, 2});
  EXPECT_EQ(a.meet(b), anticode(4, {1}));
  EXPECT_EQ(a.join(b), anticode(4, {0, 1, 2}));
  EXPECT_EQ(a.complement(), anticode(4, {2, 3}));
  EXPECT_THROW(anticode(4, {4}), InvalidArgument);
}

TEST(Support, ParseAndPrint) {
  const Support s = Support::parse(5, "1,2,4");
  EXPECT_EQ(s.indices(), (std::vector<std::size_t>{0, 1, 3}));
  EXPECT_EQ(s.to_string(), "{1,2,4}");
  EXPECT_EQ(Support::parse(3, "").size(), 0u);
  EXPECT_THROW(Support::parse(3, "0"), InvalidArgument);
  EXPECT_THROW(Support::parse(3, "4"), InvalidArgument);
  EXPECT_THROW(Support::parse(3, "1,x"), InvalidArgument);
}

TEST(Support, ScanOrder) {
  std::vector<std::string> seen;
  for_each_support(3, [&](const Support& s) {
    seen.push_back(s.to_string());
    return true;
  });
  EXPECT_EQ(seen, (std::vector<std::string>{"{}", "{1}", "{2}", "{3}", "{1,2}", "{1,3}",
                                            "{2,3}", "{1,2,3}"}));
}

TEST(PunctureShorten, RepetitionOnFirstFactor) {
  const Code c = fixtures::repetition();
  const Anticode a = anticode(2, {0});
  EXPECT_EQ(puncture(c.space(), a), SympSubspace::full(F2, 1));
  EXPECT_EQ(shorten(c.space(), a), from_pauli({"Z"}));
  EXPECT_EQ(restrict_to(c.space(), a.support()), from_pauli({"ZI"}));
}

TEST(Cleaning, Fixtures) {
  expect_all_supports_clean(fixtures::repetition(),
                            parse_pauli_list(fixtures::repetition_stabilizer()));
  expect_all_supports_clean(fixtures::bacon_shor());
  expect_all_supports_clean(fixtures::bacon_shor_gauge());
  expect_all_supports_clean(fixtures::shor(), parse_pauli_list(fixtures::shor_stabilizer()));
}

TEST(Cleaning, RandomCodes) {
  Rng rng(41);
  for (int t = 0; t < 60; ++t) {
    const PrimeField f(t % 3 == 0 ? 5 : (t % 2 ? 3 : 2));
    const std::size_t n = rng.between(1, 3);
    expect_all_supports_clean(Code(random_subspace(rng, f, n)));
    expect_all_supports_clean(random_stabilizer_code(rng, f, n));
  }
}

TEST(Cleaning, BelowDistanceOnlyForStabilizerCodes) {
  const Report r = verify_cleaning(fixtures::shor(), anticode(9, {0, 4}), 3);
  ASSERT_EQ(r.checks.size(), 4u);
  EXPECT_EQ(r.checks.back().identity, "cleaning:below-distance");
  EXPECT_EQ(r.checks.back().pass, true);

  // span{e1, f1} in V^2: rad = 0 but C^perp = A_{2}.
  const Code general(from_pauli({"XI", "ZI"}));
  ASSERT_FALSE(general.is_stabilizer());
  const Report g = verify_cleaning(general, anticode(2, {}), 1);
  EXPECT_FALSE(g.checks.back().pass.has_value());
}

TEST(SPrime, ShorWithGeneratorOrder) {
  const Code c = fixtures::shor();
  const auto gens = parse_pauli_list(fixtures::shor_stabilizer());
  const Anticode a = anticode(9, {0, 1, 2, 3});
  const SPrimeDecomposition dec = s_prime_decompose(c, a, gens);

  auto span9 = [](const std::vector<SympVector>& vs) { return SympSubspace::span(F2, 9, vs); };
  EXPECT_EQ(span9(dec.rad_in_a), from_pauli({"ZZIIIIIII", "IZZIIIIII"}));
  EXPECT_EQ(span9(dec.rad_in_aperp), from_pauli({"IIIIZZIII", "IIIIIIZZI", "IIIIIIIZZ"}));
  // S' = span{c3, c7, c8}.
  EXPECT_EQ(dec.s_prime, (std::vector<SympVector>{gens[2], gens[6], gens[7]}));

  const SympSubspace s_prime = span9(dec.s_prime);
  const SympSubspace pa = puncture(s_prime, a);
  const SympSubspace pac = puncture(s_prime, a.complement());
  EXPECT_EQ(pa, from_pauli({"IIIZ", "XXXX", "IIIX"}));
  EXPECT_EQ(pac, from_pauli({"ZIIII", "XXIII", "XXXXX"}));
  // One pair plus rad = span{XXXI} (resp. span{IIXXX}): dim 1, irk 2 on both sides.
  EXPECT_EQ(pa.radical(), from_pauli({"XXXI"}));
  EXPECT_EQ(pac.radical(), from_pauli({"IIXXX"}));
  EXPECT_EQ(pa.sym_dim(), 1u);
  EXPECT_EQ(pa.isorank(), 2u);
  EXPECT_EQ(pac.sym_dim(), 1u);
  EXPECT_EQ(pac.isorank(), 2u);
  EXPECT_TRUE(check_s_prime(c, a, dec).ok());
}

TEST(SPrime, ShorWithCanonicalBasis) {
  const Code c = fixtures::shor();
  const Anticode a = anticode(9, {0, 1, 2, 3});
  const SPrimeDecomposition dec = s_prime_decompose(c, a);
  ASSERT_EQ(dec.s_prime.size(), 3u);
  const SympSubspace s_prime = SympSubspace::span(F2, 9, dec.s_prime);
  // A different complement than the generator order gives, with the same invariants.
  EXPECT_EQ(s_prime, from_pauli({"XXXXXXIII", "IIIXXXXXX", "IIIZIZIII"}));
  EXPECT_EQ(puncture(s_prime, a).sym_dim(), 1u);
  EXPECT_EQ(puncture(s_prime, a).isorank(), 2u);
  EXPECT_EQ(puncture(s_prime, a.complement()).sym_dim(), 1u);
  EXPECT_EQ(puncture(s_prime, a.complement()).isorank(), 2u);
  EXPECT_TRUE(check_s_prime(c, a, dec).ok());
}

TEST(SPrime, RejectsForeignSpanningList) {
  const Code c = fixtures::shor();
  const auto bad = parse_pauli_list({"XIIIIIIII"});
  EXPECT_THROW(s_prime_decompose(c, anticode(9, {0}), bad), InvalidArgument);
  const auto short_list = parse_pauli_list({"ZZIIIIIII"});
  EXPECT_THROW(s_prime_decompose(c, anticode(9, {0}), short_list), InvalidArgument);
}
