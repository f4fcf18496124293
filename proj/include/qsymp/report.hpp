#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace qsymp {

using Json = nlohmann::ordered_json;

/// One evaluated identity or inequality. `pass` is empty when the identity does not
/// apply to the input (for example a stabilizer-only statement on a general code).
struct Check {
  std::string identity;
  std::string instance;
  Json lhs;
  Json rhs;
  std::optional<bool> pass;
  std::string note;
};

struct Report {
  std::vector<Check> checks;

  void add(Check c) { checks.push_back(std::move(c)); }
  void append(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
  // Records lhs == rhs.
  void expect_equal(std::string identity, std::string instance, const Json& lhs, const Json& rhs);
  // Records lhs <= rhs.
  void expect_le(std::string identity, std::string instance, long long lhs, long long rhs);
  void not_applicable(std::string identity, std::string instance, std::string note);

  std::size_t failures() const;
  std::size_t passes() const;
  bool ok() const { return failures() == 0; }
  const Check* first_failure() const;
};

Json to_json(const Check& check);
Json to_json(const Report& report);

}  // namespace qsymp
