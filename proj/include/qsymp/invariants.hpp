#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsymp/anticodes.hpp"
#include "qsymp/codes.hpp"
#include "qsymp/report.hpp"

namespace qsymp {

// alpha_C(A) = dim(C ∩ A).
std::size_t alpha(const Code& code, const Anticode& a);
// beta_C(A) = irk(C ∩ A) - irk(rad(C) ∩ A).
std::size_t beta(const Code& code, const Anticode& a);

/// Everything the invariant maps need about one support J.
struct SupportData {
  std::size_t alpha = 0;
  std::size_t beta = 0;
  std::size_t dim_f_code = 0;   // dim_F(C ∩ A_J)
  std::size_t dim_f_dual = 0;   // dim_F(C^perp ∩ A_J)
  std::size_t dim_code = 0;     // dim(C ∩ A_J)
  std::size_t irk_code = 0;     // irk(C ∩ A_J)
  std::size_t irk_radical = 0;  // irk(rad(C) ∩ A_J)
};

// One entry per support, indexed by its bitmask. Throws BudgetExceeded if 2^n
// exceeds the budget.
std::vector<SupportData> support_scan(const Code& code, std::uint64_t budget = default_budget());

/// theta_b and phi_b for b = 0..n.
struct ProfileTable {
  std::vector<std::size_t> theta;
  std::vector<std::size_t> phi;
};

/// vartheta_a, varphi_a, delta_a for a = 1..k, stored at index a - 1; empty when no
/// support qualifies.
struct WeightTable {
  std::vector<std::optional<std::size_t>> vartheta;
  std::vector<std::optional<std::size_t>> varphi;
  std::vector<std::optional<std::size_t>> delta;
};

struct InvariantTable {
  ProfileTable profiles;
  WeightTable weights;
};

ProfileTable profiles(const Code& code, std::uint64_t budget = default_budget());
// Scans supports by increasing size and stops once every weight is found.
WeightTable generalized_weights(const Code& code, std::uint64_t budget = default_budget());
InvariantTable invariant_table(const Code& code, std::uint64_t budget = default_budget());

ProfileTable profiles_from_scan(std::size_t n, const std::vector<SupportData>& scan);
WeightTable weights_from_scan(std::size_t n, std::size_t k, const std::vector<SupportData>& scan);

// Every anticode inequality and identity for C: Singleton-type bounds, profile
// steps, gaps, Galois connections, duality of anticode intersections. Failures are
// report entries; statements needing rad(C) = C^perp are "n/a" otherwise.
Report verify_bounds(const Code& code, std::uint64_t budget = default_budget());

Json to_json(const InvariantTable& table);
std::string to_ascii(const InvariantTable& table);

}  // namespace qsymp
