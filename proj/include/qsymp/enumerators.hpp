#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsymp/codes.hpp"
#include "qsymp/report.hpp"

namespace qsymp {

/// W_a = number of codewords of weight a, for a = 0..n.
struct DistributionTable {
  std::vector<std::int64_t> counts;
  friend bool operator==(const DistributionTable&, const DistributionTable&) = default;
};

/// B_b = sum over |J| = b of |C ∩ A_J|, for b = 0..n.
struct MomentTable {
  std::vector<std::int64_t> counts;
  friend bool operator==(const MomentTable&, const MomentTable&) = default;
};

/// Homogeneous sum_a c_a x^a y^(n-a); coeffs[a] = c_a.
class EnumeratorPoly {
 public:
  explicit EnumeratorPoly(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw InvalidArgument("enumerator needs n + 1 coefficients");
  }

  std::size_t degree() const { return coeffs_.size() - 1; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  std::int64_t evaluate(std::int64_t x, std::int64_t y) const;
  // Descending powers of y, e.g. "y^2 + 2xy + 5x^2".
  std::string to_string() const;

  friend bool operator==(const EnumeratorPoly&, const EnumeratorPoly&) = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

std::int64_t binomial(std::size_t n, std::size_t k);

// Codeword enumeration grouped by weight.
DistributionTable weight_distribution(const SympSubspace& space,
                                      std::uint64_t budget = default_budget());
// Sum over supports of q^{dim_F(C ∩ A_J)}; no codeword enumeration.
MomentTable binomial_moments(const SympSubspace& space, std::uint64_t budget = default_budget());
// |C ∩ A_J| for one support.
std::int64_t anticode_moment(const SympSubspace& space, const Support& support);

// B_b = sum_a binom(n-a, b-a) W_a and its inverse W_a = sum_b (-1)^{a-b} binom(n-b, a-b) B_b.
MomentTable moments_from_distribution(const DistributionTable& w);
DistributionTable distribution_from_moments(const MomentTable& b);

struct EnumeratorPair {
  EnumeratorPoly a;  // over rad(C)
  EnumeratorPoly b;  // over C
};

EnumeratorPair enumerator_polys(const Code& code, std::uint64_t budget = default_budget());
// sum_b B_b x^b (y - x)^{n-b}.
EnumeratorPoly b_poly_from_moments(const MomentTable& moments);

// Trailing x-degree of B(x,1) - A(x,1); empty when the difference vanishes.
std::optional<std::size_t> distance_from_enumerators(const EnumeratorPoly& a,
                                                     const EnumeratorPoly& b);

// Binomial-moment duality per anticode and aggregated by size, with the exponent
// 2 dim(A) - dim_F(C). The 2(b - k) exponent form is evaluated only when rad(C) = 0.
Report macwilliams_check(const Code& code, std::uint64_t budget = default_budget());

}  // namespace qsymp
