#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qsymp/codes.hpp"
#include "qsymp/oracle.hpp"
#include "qsymp/report.hpp"

namespace qsymp {

/// A code under test. `radical_spanning` fixes the generator order used to build S'
/// (empty: canonical basis of rad(C)).
struct NamedCode {
  std::string name;
  Code code;
  std::vector<SympVector> radical_spanning;
};

// Repetition, Bacon-Shor (normalizer) and Shor, with the stabilizer generators as
// the radical spanning list where there is one.
std::vector<NamedCode> fixture_codes();

oracle::Instance to_instance(const SympSubspace& w);

// Invariants of a split: form values, spanning, counts.
Report check_split(const SympSubspace& w, const SplitDecomposition& split);
// Split validity, dim_F = dim + irk, perp duality, rad(W^perp) = rad(W),
// rad(W) <= W^perp with equality iff stabilizer, both stabilizer tests agreeing,
// (W^perp)^perp = W.
Report subspace_identities(const SympSubspace& w);
// Modular law for dim_F, supermodularity of dim, submodularity of irk, equality for
// orthogonal pairs, monotonicity for nested pairs.
Report pair_identities(const SympSubspace& a, const SympSubspace& b);

Report identities_suite(const Code& code);
Report cleaning_suite(const Code& code, std::span<const SympVector> radical_spanning,
                      std::uint64_t budget);
Report enumerator_suite(const Code& code, std::uint64_t budget);
Report oracle_suite(const Code& code, std::uint64_t budget);

// "identities", "bounds", "cleaning", "enumerators", "oracle" or "all".
const std::vector<std::string>& suite_names();
Report run_suite(const std::string& suite, const Code& code,
                 std::span<const SympVector> radical_spanning, std::uint64_t budget);

struct VerifyOptions {
  std::string suite = "all";
  std::uint64_t seed = 7;
  std::uint64_t budget = kDefaultBudget;
  std::size_t random_codes = 8;    // of each kind: general and stabilizer
  std::optional<std::uint32_t> q;  // field of the random codes; default alternates 2, 3
};

struct VerifyResult {
  Json json;
  std::vector<std::pair<std::string, Report>> reports;  // by code name, in run order
  std::size_t failures = 0;
};

// Runs the suite on `codes` followed by seeded random codes.
VerifyResult verify(const std::vector<NamedCode>& codes, const VerifyOptions& options);

}  // namespace qsymp
