#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qsymp/symplectic.hpp"

namespace qsymp {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

// kDefaultBudget unless the QSYMP_BUDGET environment variable holds a positive integer.
std::uint64_t default_budget();

// q^exponent, throwing BudgetExceeded when it exceeds the budget.
std::uint64_t guarded_power(std::uint64_t q, std::size_t exponent, std::uint64_t budget,
                            const std::string& what);

/// A symplectic code C ≤ V^n.
class Code {
 public:
  explicit Code(SympSubspace space) : space_(std::move(space)) {}

  const SympSubspace& space() const { return space_; }
  const PrimeField& field() const { return space_.field(); }
  std::size_t n() const { return space_.n(); }
  std::size_t k() const { return space_.sym_dim(); }
  std::size_t s() const { return space_.isorank(); }
  std::size_t dim_f() const { return space_.dim_f(); }
  const SympSubspace& radical() const { return space_.radical(); }

  // rad(C) = C^perp, i.e. C^perp ≤ C.
  bool is_stabilizer() const { return radical() == perp(space_); }

 private:
  SympSubspace space_;
};

struct CodeParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t s = 0;
  std::optional<std::size_t> d;  // absent when C = rad(C)
  std::size_t maxwt = 0;
};

// Visits every vector of span(generators) exactly once, assuming the generators are
// independent, together with its coefficient tuple. Consecutive visits differ by one
// generator, so each step costs O(n).
void for_each_combination(
    std::span<const SympVector> generators, std::uint64_t budget,
    const std::function<void(const SympVector&, std::span<const Scalar>)>& visit);

// Visits every codeword once.
void for_each_codeword(const SympSubspace& space, std::uint64_t budget,
                       const std::function<void(const SympVector&)>& visit);

// min { wt(v) : v ∈ C \ rad(C) }.
std::optional<std::size_t> min_distance(const Code& code, std::uint64_t budget = default_budget());
std::size_t max_weight(const Code& code, std::uint64_t budget = default_budget());
CodeParams params(const Code& code, std::uint64_t budget = default_budget());

/// Stabilizer, gauge group and normalizer: C^perp = rad(D) and C^perp ≤ D ≤ C.
struct SubsystemCode {
  Code gauge;
  SympSubspace stabilizer;
  Code normalizer;
  std::size_t logical_count = 0;
};

SubsystemCode subsystem_from_gauge(const Code& gauge);

// C = S^perp for isotropic S. Throws CommutationViolation naming the first
// non-commuting pair of basis rows.
Code stabilizer_code_from_isotropic(const SympSubspace& stabilizer);
// Same, but the violation names positions in `generators`.
Code stabilizer_code_from_generators(PrimeField field, std::size_t n,
                                     std::span<const SympVector> generators);

// Pauli strings over {I, X, Z, Y} (q = 2), X -> e, Z -> f, Y -> e + f. A leading
// sign/phase ("+", "-", "i", "-i", ...) is accepted and discarded.
SympVector parse_pauli(const std::string& text);
std::string to_pauli(const SympVector& v);
std::vector<SympVector> parse_pauli_list(const std::vector<std::string>& generators);
// `n` is only consulted when the generator list is empty.
SympSubspace from_pauli(const std::vector<std::string>& generators, std::size_t n = 0);

// One generator per line; blank lines and '#' comments are skipped. ParseError
// carries the 1-based line number.
std::vector<SympVector> read_pauli_file(std::istream& in);

namespace fixtures {

// Quantum repetition code [[2,1,1]]_2: C = span{(e,e), (f,f), (f,0)}.
Code repetition();
std::vector<std::string> repetition_stabilizer();

// 2x2 Bacon-Shor [[4,1,2]]_2.
std::vector<std::string> bacon_shor_gauge_generators();
Code bacon_shor_gauge();
Code bacon_shor();  // the normalizer

// Shor [[9,1,3]]_2; generators s_1..s_8 in the usual order.
std::vector<std::string> shor_stabilizer();
Code shor();

}  // namespace fixtures

}  // namespace qsymp
