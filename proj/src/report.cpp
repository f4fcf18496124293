#include "qsymp/report.hpp"

namespace qsymp {

void Report::expect_equal(std::string identity, std::string instance, const Json& lhs,
                          const Json& rhs) {
  checks.push_back({std::move(identity), std::move(instance), lhs, rhs, lhs == rhs, {}});
}

void Report::expect_le(std::string identity, std::string instance, long long lhs, long long rhs) {
  checks.push_back({std::move(identity), std::move(instance), lhs, rhs, lhs <= rhs, {}});
}

void Report::not_applicable(std::string identity, std::string instance, std::string note) {
  checks.push_back({std::move(identity), std::move(instance), nullptr, nullptr, std::nullopt,
                    std::move(note)});
}

std::size_t Report::failures() const {
  std::size_t count = 0;
  for (const auto& c : checks) count += (c.pass.has_value() && !*c.pass) ? 1 : 0;
  return count;
}

std::size_t Report::passes() const {
  std::size_t count = 0;
  for (const auto& c : checks) count += (c.pass.value_or(false)) ? 1 : 0;
  return count;
}

const Check* Report::first_failure() const {
  for (const auto& c : checks) {
    if (c.pass.has_value() && !*c.pass) return &c;
  }
  return nullptr;
}

Json to_json(const Check& check) {
  Json j;
  j["identity"] = check.identity;
  if (!check.instance.empty()) j["instance"] = check.instance;
  j["lhs"] = check.lhs;
  j["rhs"] = check.rhs;
  j["pass"] = check.pass.has_value() ? Json(*check.pass) : Json(nullptr);
  if (!check.note.empty()) j["note"] = check.note;
  return j;
}

Json to_json(const Report& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) checks.push_back(to_json(c));
  Json j;
  j["checks"] = std::move(checks);
  j["failures"] = report.failures();
  return j;
}

}  // namespace qsymp
