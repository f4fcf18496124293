#include "qsymp/invariants.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace qsymp {

namespace {

long long ll(std::size_t v) { return static_cast<long long>(v); }

SupportData scan_one(const SympSubspace& c, const SympSubspace& dual, const SympSubspace& rad,
                     const Support& j) {
  const SympSubspace in_c = restrict_to(c, j);
  const std::size_t irk_rad = restrict_to(rad, j).dim_f();  // isotropic: irk = dim_F
  SupportData d;
  d.dim_f_code = in_c.dim_f();
  d.dim_code = in_c.sym_dim();
  d.irk_code = in_c.isorank();
  d.irk_radical = irk_rad;
  d.dim_f_dual = restrict_to(dual, j).dim_f();
  d.alpha = d.dim_code;
  d.beta = d.irk_code - d.irk_radical;
  return d;
}

std::string opt_string(const std::optional<std::size_t>& v) {
  return v ? std::to_string(*v) : std::string("-");
}

Json opt_json(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

std::size_t alpha(const Code& code, const Anticode& a) {
  return restrict_to(code.space(), a.support()).sym_dim();
}

std::size_t beta(const Code& code, const Anticode& a) {
  return restrict_to(code.space(), a.support()).isorank() -
         restrict_to(code.radical(), a.support()).isorank();
}

std::vector<SupportData> support_scan(const Code& code, std::uint64_t budget) {
  const std::size_t n = code.n();
  const std::uint64_t count = guarded_power(2, n, budget, "support scan");
  const SympSubspace dual = perp(code.space());
  std::vector<SupportData> out(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    out[mask] = scan_one(code.space(), dual, code.radical(), Support(n, mask));
  }
  return out;
}

ProfileTable profiles_from_scan(std::size_t n, const std::vector<SupportData>& scan) {
  ProfileTable t{std::vector<std::size_t>(n + 1, 0), std::vector<std::size_t>(n + 1, 0)};
  for (std::size_t mask = 0; mask < scan.size(); ++mask) {
    const std::size_t b = Support(n, mask).size();
    t.theta[b] = std::max(t.theta[b], scan[mask].alpha);
    t.phi[b] = std::max(t.phi[b], scan[mask].beta);
  }
  return t;
}

WeightTable weights_from_scan(std::size_t n, std::size_t k, const std::vector<SupportData>& scan) {
  WeightTable t{std::vector<std::optional<std::size_t>>(k),
                std::vector<std::optional<std::size_t>>(k),
                std::vector<std::optional<std::size_t>>(k)};
  auto lower = [](std::optional<std::size_t>& slot, std::size_t value) {
    if (!slot || value < *slot) slot = value;
  };
  for (std::size_t mask = 0; mask < scan.size(); ++mask) {
    const std::size_t size = Support(n, mask).size();
    for (std::size_t a = 1; a <= k; ++a) {
      if (scan[mask].alpha >= a) lower(t.vartheta[a - 1], size);
      if (scan[mask].beta >= a) lower(t.varphi[a - 1], size);
      if (scan[mask].alpha + scan[mask].beta >= 2 * a) lower(t.delta[a - 1], size);
    }
  }
  return t;
}

ProfileTable profiles(const Code& code, std::uint64_t budget) {
  return profiles_from_scan(code.n(), support_scan(code, budget));
}

WeightTable generalized_weights(const Code& code, std::uint64_t budget) {
  const std::size_t n = code.n();
  const std::size_t k = code.k();
  guarded_power(2, n, budget, "support scan");
  const SympSubspace dual = perp(code.space());
  WeightTable t{std::vector<std::optional<std::size_t>>(k),
                std::vector<std::optional<std::size_t>>(k),
                std::vector<std::optional<std::size_t>>(k)};
  std::size_t missing = 3 * k;
  if (missing == 0) return t;
  auto fill = [&](std::optional<std::size_t>& slot, bool hit, std::size_t size) {
    if (hit && !slot) {
      slot = size;
      --missing;
    }
  };
  // Supports arrive in increasing size, so the first hit is the minimum.
  for_each_support(n, [&](const Support& j) {
    const SupportData d = scan_one(code.space(), dual, code.radical(), j);
    for (std::size_t a = 1; a <= k; ++a) {
      fill(t.vartheta[a - 1], d.alpha >= a, j.size());
      fill(t.varphi[a - 1], d.beta >= a, j.size());
      fill(t.delta[a - 1], d.alpha + d.beta >= 2 * a, j.size());
    }
    return missing > 0;
  });
  return t;
}

InvariantTable invariant_table(const Code& code, std::uint64_t budget) {
  const auto scan = support_scan(code, budget);
  return {profiles_from_scan(code.n(), scan), weights_from_scan(code.n(), code.k(), scan)};
}

namespace {

// Runs `holds` on every support and records one aggregated check:
// lhs = supports where it holds, rhs = supports tested.
template <typename Pred>
void check_all_supports(Report& report, const std::string& identity, std::size_t n,
                        const std::vector<SupportData>& scan, Pred holds) {
  std::size_t good = 0;
  std::size_t tested = 0;
  std::string first_bad;
  for (std::size_t mask = 0; mask < scan.size(); ++mask) {
    const auto result = holds(mask);
    if (!result.has_value()) continue;
    ++tested;
    if (*result) {
      ++good;
    } else if (first_bad.empty()) {
      first_bad = "fails at J=" + Support(n, mask).to_string();
    }
  }
  Check c{identity, "all supports", good, tested, good == tested, first_bad};
  report.add(std::move(c));
}

}  // namespace

Report verify_bounds(const Code& code, std::uint64_t budget) {
  const std::size_t n = code.n();
  const std::size_t k = code.k();
  const CodeParams p = params(code, budget);
  const auto scan = support_scan(code, budget);
  const ProfileTable prof = profiles_from_scan(n, scan);
  const WeightTable w = weights_from_scan(n, k, scan);
  const bool stabilizer = code.is_stabilizer();
  const std::uint64_t full = scan.size() - 1;
  Report r;

  r.expect_le("anticode-bound", "k <= maxwt", ll(k), ll(p.maxwt));

  // Distance-dependent bounds for stabilizer codes.
  const bool with_d = stabilizer && p.d.has_value();
  const char* why = !stabilizer ? "requires rad(C) = C^perp" : "minimum distance undefined";
  if (with_d) {
    const long long d = ll(*p.d);
    r.expect_le("quantum-singleton", "2(d-1) <= n-k", 2 * (d - 1), ll(n) - ll(k));
    for (std::size_t a = 1; a <= k; ++a) {
      const std::string inst = "a=" + std::to_string(a);
      r.expect_le("generalized-singleton-1", inst, ll(w.delta[a - 1].value_or(n + 1)),
                  ll(n) - d - ll(k) + ll(a) + 1);
      r.expect_le("generalized-singleton-2", inst, ll(w.varphi[a - 1].value_or(n + 1)),
                  ll(n) - d - (ll(k) - ll(a)) / 2 + 1);
    }
    if (k >= 1) {
      r.expect_equal("anticode-distance", "varphi_1 = d", opt_json(w.varphi[0]), *p.d);
    }
    check_all_supports(r, "below-distance-vanishing", n, scan,
                       [&](std::size_t m) -> std::optional<bool> {
                         if (Support(n, m).size() >= *p.d) return std::nullopt;
                         return scan[m].alpha == 0 && scan[m].beta == 0;
                       });
  } else {
    for (const char* id : {"quantum-singleton", "generalized-singleton-1",
                           "generalized-singleton-2", "anticode-distance",
                           "below-distance-vanishing"}) {
      r.not_applicable(id, "", why);
    }
  }

  for (std::size_t a = 1; a <= k; ++a) {
    r.expect_le("lower-singleton", "a=" + std::to_string(a), ll(a),
                ll(w.varphi[a - 1].value_or(0)));
  }

  for (std::size_t b = 0; b <= n; ++b) {
    r.expect_le("theta-le-phi", "b=" + std::to_string(b), ll(prof.theta[b]), ll(prof.phi[b]));
  }
  for (std::size_t b = 1; b + 1 <= n; ++b) {
    const std::string inst = "b=" + std::to_string(b);
    const long long t0 = ll(prof.theta[b]), t1 = ll(prof.theta[b + 1]);
    const long long f0 = ll(prof.phi[b]), f1 = ll(prof.phi[b + 1]);
    r.expect_le("profile-step-theta", inst, t1, t0 + 2);
    r.expect_le("profile-step-phi", inst, f1, f0 + 2);
    if (t1 == t0 + 2) {
      r.expect_equal("profile-step-theta-forces-phi", inst, f1, f0);
    }
    if (f1 == f0 + 2) {
      r.expect_equal("profile-step-phi-forces-theta", inst, t1, t0);
    }
    r.expect_le("profile-step-sum", inst, t1 + f1, t0 + f0 + 2);
  }

  for (std::size_t a = 1; a + 2 <= k; ++a) {
    const std::string inst = "a=" + std::to_string(a);
    r.expect_le("vartheta-gap", inst, ll(w.vartheta[a - 1].value_or(n + 1)) + 1,
                ll(w.vartheta[a + 1].value_or(n + 1)));
    r.expect_le("varphi-gap", inst, ll(w.varphi[a - 1].value_or(n + 1)) + 1,
                ll(w.varphi[a + 1].value_or(n + 1)));
  }
  for (std::size_t a = 1; a + 1 <= k; ++a) {
    r.expect_le("delta-monotone", "a=" + std::to_string(a),
                ll(w.delta[a - 1].value_or(n + 1)) + 1, ll(w.delta[a].value_or(n + 1)));
  }

  // Galois connections: a <= theta_b <=> vartheta_a <= b, likewise for phi.
  std::size_t theta_good = 0;
  std::size_t phi_good = 0;
  std::size_t pairs = 0;
  for (std::size_t a = 1; a <= k; ++a) {
    for (std::size_t b = 1; b <= n; ++b) {
      ++pairs;
      theta_good += ((a <= prof.theta[b]) == (w.vartheta[a - 1].value_or(n + 1) <= b)) ? 1 : 0;
      phi_good += ((a <= prof.phi[b]) == (w.varphi[a - 1].value_or(n + 1) <= b)) ? 1 : 0;
    }
  }
  r.expect_equal("galois-theta", "all (a,b)", theta_good, pairs);
  r.expect_equal("galois-phi", "all (a,b)", phi_good, pairs);

  check_all_supports(r, "alpha-le-beta", n, scan, [&](std::size_t m) -> std::optional<bool> {
    return scan[m].alpha <= scan[m].beta;
  });
  check_all_supports(r, "macwilliams-rank", n, scan, [&](std::size_t m) -> std::optional<bool> {
    const std::size_t comp = full & ~m;
    const std::size_t comp_size = Support(n, comp).size();
    return ll(scan[m].dim_f_code) ==
           ll(code.dim_f()) - 2 * ll(comp_size) + ll(scan[comp].dim_f_dual);
  });

  if (stabilizer) {
    check_all_supports(r, "weight-complementarity", n, scan,
                       [&](std::size_t m) -> std::optional<bool> {
                         return scan[m].beta + scan[full & ~m].alpha == k;
                       });
    check_all_supports(r, "beta-alpha-symmetry", n, scan,
                       [&](std::size_t m) -> std::optional<bool> {
                         const auto& c = scan[full & ~m];
                         return ll(scan[m].beta) - ll(scan[m].alpha) == ll(c.beta) - ll(c.alpha);
                       });
    check_all_supports(r, "macwilliams-stabilizer", n, scan,
                       [&](std::size_t m) -> std::optional<bool> {
                         const std::size_t comp = full & ~m;
                         const auto& c = scan[comp];
                         const long long lhs = ll(Support(n, comp).size()) - ll(c.dim_code) -
                                               ll(c.irk_code);
                         const long long rhs = ll(Support(n, m).size()) -
                                               ll(scan[m].irk_radical) - ll(k);
                         return lhs == rhs;
                       });
  } else {
    for (const char* id : {"weight-complementarity", "beta-alpha-symmetry",
                           "macwilliams-stabilizer"}) {
      r.not_applicable(id, "all supports", "requires rad(C) = C^perp");
    }
  }
  return r;
}

Json to_json(const InvariantTable& table) {
  Json j;
  j["theta"] = table.profiles.theta;
  j["phi"] = table.profiles.phi;
  Json vt = Json::array(), vp = Json::array(), dl = Json::array();
  for (const auto& v : table.weights.vartheta) vt.push_back(opt_json(v));
  for (const auto& v : table.weights.varphi) vp.push_back(opt_json(v));
  for (const auto& v : table.weights.delta) dl.push_back(opt_json(v));
  j["vartheta"] = std::move(vt);
  j["varphi"] = std::move(vp);
  j["delta"] = std::move(dl);
  return j;
}

std::string to_ascii(const InvariantTable& table) {
  std::ostringstream out;
  out << "  b  theta_b  phi_b\n";
  for (std::size_t b = 0; b < table.profiles.theta.size(); ++b) {
    out << std::setw(3) << b << std::setw(9) << table.profiles.theta[b] << std::setw(7)
        << table.profiles.phi[b] << '\n';
  }
  out << "  a  vartheta_a  varphi_a  delta_a\n";
  for (std::size_t a = 0; a < table.weights.vartheta.size(); ++a) {
    out << std::setw(3) << a + 1 << std::setw(12) << opt_string(table.weights.vartheta[a])
        << std::setw(10) << opt_string(table.weights.varphi[a]) << std::setw(9)
        << opt_string(table.weights.delta[a]) << '\n';
  }
  return out.str();
}

}  // namespace qsymp
