#include <gtest/gtest.h>

#include "qsymp/random.hpp"
#include "qsymp/suites.hpp"

using namespace qsymp;

namespace {

std::string failures(const Report& r) {
  std::string out;
  for (const auto& c : r.checks) {
    if (c.pass == false) out += c.identity + " [" + c.instance + "] " + c.note + "\n";
  }
  return out;
}

}  // namespace

TEST(Suites, FixturesPassEverySuite) {
  for (const auto& item : fixture_codes()) {
    const Report r = run_suite("all", item.code, item.radical_spanning, kDefaultBudget);
    EXPECT_TRUE(r.ok()) << item.name << "\n" << failures(r);
  }
}

TEST(Suites, UnknownSuiteThrows) {
  EXPECT_THROW(run_suite("nope", fixtures::repetition(), {}, kDefaultBudget), InvalidArgument);
}

TEST(Suites, SubspaceIdentitiesOnRandomSubspaces) {
  Rng rng(81);
  for (int t = 0; t < 100; ++t) {
    const PrimeField f(t % 3 == 0 ? 5 : (t % 2 ? 3 : 2));
    const Report r = subspace_identities(random_subspace(rng, f, rng.between(1, 4)));
    EXPECT_TRUE(r.ok()) << failures(r);
  }
}

TEST(Suites, CheckSplitRejectsBrokenSplit) {
  const auto w = fixtures::repetition().space();
  SplitDecomposition broken = w.split();
  broken.pairs[0].second = broken.pairs[0].first;
  EXPECT_FALSE(check_split(w, broken).ok());
  SplitDecomposition missing = w.split();
  missing.radical_basis.clear();
  EXPECT_FALSE(check_split(w, missing).ok());
}

TEST(Suites, PairIdentitiesFlagSupermodularityCounterexample) {
  const PrimeField f(2);
  const auto a = from_pauli({"XI", "ZZ"});
  const auto b = from_pauli({"IX", "ZZ"});
  const Report r = pair_identities(a, b);
  for (const auto& c : r.checks) {
    const bool expect_fail = c.identity == "supermodularity:dim" || c.identity == "submodularity:irk";
    EXPECT_EQ(c.pass, !expect_fail) << c.identity;
  }
}

TEST(Verify, SameSeedSameJson) {
  VerifyOptions o;
  o.seed = 7;
  o.random_codes = 3;
  const auto first = verify(fixture_codes(), o).json.dump();
  const auto second = verify(fixture_codes(), o).json.dump();
  EXPECT_EQ(first, second);
  o.seed = 8;
  EXPECT_NE(verify(fixture_codes(), o).json.dump(), first);
}

TEST(Verify, SummaryCounts) {
  VerifyOptions o;
  o.random_codes = 0;
  o.suite = "bounds";
  const VerifyResult r = verify(fixture_codes(), o);
  EXPECT_EQ(r.json["summary"]["codes"], 3);
  EXPECT_EQ(r.failures, 0u);
  EXPECT_EQ(r.reports.size(), 3u);
}
