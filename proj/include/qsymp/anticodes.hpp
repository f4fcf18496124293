#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qsymp/codes.hpp"
#include "qsymp/report.hpp"
#include "qsymp/support.hpp"
#include "qsymp/symplectic.hpp"

namespace qsymp {

/// The anticode A_J = { v : v_j = 0 for j ∉ J }. Anticodes are exactly the free
/// codes, so the support is a complete description.
class Anticode {
 public:
  explicit Anticode(Support support) : support_(support) {}

  const Support& support() const { return support_; }
  std::size_t ambient() const { return support_.ambient(); }
  // dim(A_J) = irk(A_J) = maxwt(A_J) = |J|.
  std::size_t dim() const { return support_.size(); }

  // A^perp = A_{J^c}.
  Anticode complement() const { return Anticode(support_.complement()); }
  Anticode meet(const Anticode& other) const { return Anticode(support_.meet(other.support_)); }
  Anticode join(const Anticode& other) const { return Anticode(support_.join(other.support_)); }

  SympSubspace realize(PrimeField field) const { return SympSubspace::free_on(field, support_); }

  friend bool operator==(const Anticode&, const Anticode&) = default;

 private:
  Support support_;
};

// 0-based indices; throws InvalidArgument for indices >= n.
Anticode anticode(std::size_t n, const std::vector<std::size_t>& indices);

// pi_J(W) ≤ V^{|J|}, factors in increasing order of J.
SympSubspace project(const SympSubspace& w, const Support& support);
// W ∩ A_J as a subspace of V^n.
SympSubspace restrict_to(const SympSubspace& w, const Support& support);

// Pi_A C = pi_J(C) and Sigma_A C = pi_J(C ∩ A).
SympSubspace puncture(const SympSubspace& code, const Anticode& a);
SympSubspace shorten(const SympSubspace& code, const Anticode& a);

// Sigma_A C^perp = (Pi_A C)^perp and Pi_A C^perp = (Sigma_A C)^perp. When the
// distance is given and C is a stabilizer code with dim(A) < d, additionally
// Pi_A C = Pi_A rad(C).
Report verify_cleaning(const Code& code, const Anticode& a,
                       std::optional<std::size_t> distance = std::nullopt);

/// rad(C) = (rad(C) ∩ A) ⊕ (rad(C) ∩ A^perp) ⊕ S'.
struct SPrimeDecomposition {
  std::vector<SympVector> rad_in_a;
  std::vector<SympVector> rad_in_aperp;
  std::vector<SympVector> s_prime;
};

// S' is filled greedily from `radical_spanning` (default: the canonical basis of
// rad(C)), keeping each vector not already in the span built so far.
SPrimeDecomposition s_prime_decompose(const Code& code, const Anticode& a,
                                      std::span<const SympVector> radical_spanning = {});

// Direct sum, isotropy, mutual orthogonality and injectivity of pi_J on S'.
Report check_s_prime(const Code& code, const Anticode& a, const SPrimeDecomposition& dec);

// Complementarity of the punctured radical across A and A^perp, plus the
// stabilizer-only forms when rad(C) = C^perp.
Report complementarity_check(const Code& code, const Anticode& a,
                             std::span<const SympVector> radical_spanning = {});

}  // namespace qsymp
