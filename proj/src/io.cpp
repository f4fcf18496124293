#include "qsymp/io.hpp"

namespace qsymp {

Json to_json(const SympSubspace& w) {
  Json j;
  j["q"] = w.field().order();
  j["n"] = w.n();
  j["basis"] = w.basis().to_rows();
  return j;
}

SympSubspace subspace_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw ParseError("expected a JSON object", 0);
    const auto q = j.at("q").get<std::uint32_t>();
    const auto n = j.at("n").get<std::size_t>();
    if (!is_prime(q)) throw ParseError("q must be prime", 0);
    const PrimeField field(q);
    std::vector<SympVector> rows;
    for (const auto& row : j.at("basis")) {
      const auto coords = row.get<std::vector<std::int64_t>>();
      if (coords.size() != 2 * n) throw ParseError("basis rows must have 2n entries", 0);
      rows.emplace_back(field, coords);
    }
    return SympSubspace::span(field, n, rows);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid subspace JSON: ") + e.what(), 0);
  }
}

std::string role_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("role")) return "code";
  if (!j["role"].is_string()) throw ParseError("role must be a string", 0);
  const auto role = j["role"].get<std::string>();
  if (role != "code" && role != "stabilizer" && role != "gauge") {
    throw ParseError("unknown role '" + role + "'", 0);
  }
  return role;
}

Json to_json(const CodeParams& p) {
  Json j;
  j["n"] = p.n;
  j["k_sym"] = p.k;
  j["s"] = p.s;
  j["d"] = p.d ? Json(*p.d) : Json(nullptr);
  j["maxwt"] = p.maxwt;
  return j;
}

Json to_json(const DistributionTable& w) { return w.counts; }
Json to_json(const MomentTable& b) { return b.counts; }
Json to_json(const EnumeratorPoly& p) { return p.coeffs(); }

std::string describe(const SympVector& v) {
  if (v.field().order() == 2) return to_pauli(v);
  std::string out = "(";
  for (std::size_t i = 0; i < v.n(); ++i) {
    if (i > 0) out += "|";
    out += std::to_string(v.x(i)) + "," + std::to_string(v.z(i));
  }
  return out + ")";
}

}  // namespace qsymp
