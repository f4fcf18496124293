#include "qsymp/suites.hpp"

#include <algorithm>
#include <map>

#include "qsymp/anticodes.hpp"
#include "qsymp/enumerators.hpp"
#include "qsymp/invariants.hpp"
#include "qsymp/io.hpp"
#include "qsymp/random.hpp"

namespace qsymp {

namespace {

long long ll(std::size_t v) { return static_cast<long long>(v); }

// Every element of W, collected through the oracle's own enumeration of a basis.
std::vector<oracle::Coords> elements(const SympSubspace& w, std::uint64_t budget) {
  return oracle::enumerate(to_instance(w), budget);
}

Json opt(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

// Tallies a per-support identity so large scans stay one report line.
class Tally {
 public:
  explicit Tally(std::string identity) : identity_(std::move(identity)) {}
  void record(bool ok, const std::string& where) {
    ++tested_;
    if (ok) {
      ++good_;
    } else if (first_bad_.empty()) {
      first_bad_ = "fails at " + where;
    }
  }
  void flush(Report& report, const std::string& instance) const {
    report.add({identity_, instance, good_, tested_, good_ == tested_, first_bad_});
  }

 private:
  std::string identity_;
  std::size_t good_ = 0;
  std::size_t tested_ = 0;
  std::string first_bad_;
};

}  // namespace

std::vector<NamedCode> fixture_codes() {
  return {
      {"repetition", fixtures::repetition(), parse_pauli_list(fixtures::repetition_stabilizer())},
      {"bacon-shor", fixtures::bacon_shor(), {}},
      {"shor", fixtures::shor(), parse_pauli_list(fixtures::shor_stabilizer())},
  };
}

oracle::Instance to_instance(const SympSubspace& w) {
  oracle::Instance inst{w.field(), w.n(), {}};
  for (const auto& v : w.basis_vectors()) inst.generators.emplace_back(v.coords().begin(), v.coords().end());
  return inst;
}

Report check_split(const SympSubspace& w, const SplitDecomposition& split) {
  Report r;
  std::vector<SympVector> all = split.radical_basis;
  bool pairs_ok = true;
  for (const auto& [u, v] : split.pairs) {
    pairs_ok = pairs_ok && form(u, v) == 1;
    all.push_back(u);
    all.push_back(v);
  }
  r.expect_equal("split:pair-form", "", pairs_ok, true);

  bool orthogonal = true;
  for (std::size_t i = 0; i < split.pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < split.pairs.size(); ++j) {
      const auto& [a, b] = split.pairs[i];
      const auto& [c, d] = split.pairs[j];
      orthogonal = orthogonal && form(a, c) == 0 && form(a, d) == 0 && form(b, c) == 0 &&
                   form(b, d) == 0;
    }
  }
  for (const auto& x : split.radical_basis) {
    for (const auto& y : all) orthogonal = orthogonal && form(x, y) == 0;
  }
  r.expect_equal("split:orthogonal", "", orthogonal, true);
  r.expect_equal("split:count", "", all.size(), w.dim_f());
  r.expect_equal("split:spans", "", SympSubspace::span(w.field(), w.n(), all) == w, true);
  return r;
}

Report subspace_identities(const SympSubspace& w) {
  Report r = check_split(w, w.split());
  const SympSubspace wp = perp(w);
  const std::size_t n = w.n();
  r.expect_equal("split:dim-f", "", w.dim_f(), w.sym_dim() + w.isorank());
  r.expect_equal("perp:dim-f", "", wp.dim_f(), 2 * n - w.dim_f());
  r.expect_equal("perp:double", "", perp(wp) == w, true);
  r.expect_equal("duality:dim", "", ll(wp.sym_dim()), ll(n) - ll(w.isorank()));
  r.expect_equal("duality:irk", "", ll(wp.isorank()), ll(n) - ll(w.sym_dim()));
  r.expect_equal("radical:of-perp", "", wp.radical() == w.radical(), true);
  r.expect_equal("radical:is-intersection", "", intersect(w, wp) == w.radical(), true);
  r.expect_equal("stab:radical-in-perp", "", w.radical().is_subspace_of(wp), true);
  r.expect_equal("stab:equality-iff-stabilizer", "", w.radical() == wp, is_stabilizer_subspace(w));
  r.expect_equal("stab:two-tests-agree", "", is_stabilizer_subspace(w), perp_is_isotropic(w));
  return r;
}

Report pair_identities(const SympSubspace& a, const SympSubspace& b) {
  Report r;
  const SympSubspace s = sum(a, b);
  const SympSubspace i = intersect(a, b);
  r.expect_equal("modularity:dim-f", "", s.dim_f() + i.dim_f(), a.dim_f() + b.dim_f());
  r.expect_le("supermodularity:dim", "", ll(a.sym_dim() + b.sym_dim()),
              ll(s.sym_dim() + i.sym_dim()));
  r.expect_le("submodularity:irk", "", ll(s.isorank() + i.isorank()),
              ll(a.isorank() + b.isorank()));
  if (a.is_subspace_of(perp(b))) {
    r.expect_equal("modularity:dim", "orthogonal pair", s.sym_dim() + i.sym_dim(),
                   a.sym_dim() + b.sym_dim());
    r.expect_equal("modularity:irk", "orthogonal pair", s.isorank() + i.isorank(),
                   a.isorank() + b.isorank());
  }
  if (a.is_subspace_of(b)) {
    r.expect_le("monotone:dim", "nested pair", ll(a.sym_dim()), ll(b.sym_dim()));
    r.expect_le("monotone:irk", "nested pair", ll(a.isorank()), ll(b.isorank()));
  }
  return r;
}

Report identities_suite(const Code& code) {
  const SympSubspace& c = code.space();
  Report r = subspace_identities(c);
  r.append(subspace_identities(code.radical()));
  r.append(pair_identities(c, perp(c)));
  r.append(pair_identities(code.radical(), c));

  // Pairs with every anticode, aggregated per identity.
  std::map<std::string, Tally> tallies;
  for_each_support(code.n(), [&](const Support& j) {
    const Report pr = pair_identities(c, SympSubspace::free_on(code.field(), j));
    for (const auto& check : pr.checks) {
      auto it = tallies.try_emplace(check.identity, check.identity).first;
      it->second.record(check.pass.value_or(true), "J=" + j.to_string());
    }
    return true;
  });
  for (const auto& [id, tally] : tallies) tally.flush(r, "C with all anticodes");
  return r;
}

Report cleaning_suite(const Code& code, std::span<const SympVector> radical_spanning,
                      std::uint64_t budget) {
  const auto d = min_distance(code, budget);
  guarded_power(2, code.n(), budget, "cleaning scan");
  Report r;
  for_each_support(code.n(), [&](const Support& j) {
    const Anticode a(j);
    r.append(verify_cleaning(code, a, d));
    r.append(complementarity_check(code, a, radical_spanning));
    return true;
  });
  return r;
}

Report enumerator_suite(const Code& code, std::uint64_t budget) {
  const SympSubspace& c = code.space();
  const std::size_t n = code.n();
  const auto size = static_cast<std::int64_t>(guarded_power(code.field().order(), code.dim_f(), budget, "enumeration"));
  const auto rad_size = static_cast<std::int64_t>(guarded_power(code.field().order(), code.radical().dim_f(), budget, "enumeration"));
  Report r;

  const DistributionTable w = weight_distribution(c, budget);
  const MomentTable b = binomial_moments(c, budget);
  std::int64_t total = 0;
  for (auto x : w.counts) total += x;
  r.expect_equal("distribution:total", "", total, size);
  r.expect_equal("distribution:w0", "", w.counts[0], 1);
  r.expect_equal("moments:b0", "", b.counts[0], 1);
  r.expect_equal("moments:bn", "", b.counts[n], size);
  r.expect_equal("relations:moments-from-distribution", "", moments_from_distribution(w).counts, b.counts);
  r.expect_equal("relations:distribution-from-moments", "", distribution_from_moments(b).counts, w.counts);

  // Per-anticode Moebius pair over the support lattice.
  std::vector<std::int64_t> exact(std::size_t{1} << n, 0);
  for_each_codeword(c, budget, [&](const SympVector& v) { ++exact[v.support().bits()]; });
  Tally zeta("relations:per-anticode-moment");
  Tally mobius("relations:per-anticode-distribution");
  for_each_support(n, [&](const Support& j) {
    std::int64_t up = 0;
    std::int64_t alternating = 0;
    // Subsets of J via the standard submask walk.
    for (std::uint64_t sub = j.bits();; sub = (sub - 1) & j.bits()) {
      up += exact[sub];
      const Support s(n, sub);
      const std::int64_t sign = ((j.size() - s.size()) % 2 == 0) ? 1 : -1;
      alternating += sign * anticode_moment(c, s);
      if (sub == 0) break;
    }
    zeta.record(up == anticode_moment(c, j), "J=" + j.to_string());
    mobius.record(alternating == exact[j.bits()], "J=" + j.to_string());
    return true;
  });
  zeta.flush(r, "all supports");
  mobius.flush(r, "all supports");

  const EnumeratorPair polys = enumerator_polys(code, budget);
  r.expect_equal("enumerator:b-poly-routes", "", polys.b.coeffs(), b_poly_from_moments(b).coeffs());
  r.expect_equal("enumerator:a-at-one", "", polys.a.evaluate(1, 1), rad_size);
  r.expect_equal("enumerator:b-at-one", "", polys.b.evaluate(1, 1), size);
  r.expect_equal("enumerator:trailing-degree", "", opt(distance_from_enumerators(polys.a, polys.b)),
                 opt(min_distance(code, budget)));
  r.append(macwilliams_check(code, budget));
  return r;
}

Report oracle_suite(const Code& code, std::uint64_t budget) {
  const PrimeField& f = code.field();
  const oracle::Instance inst = to_instance(code.space());
  const auto all = oracle::enumerate(inst, budget);
  const auto rad = oracle::radical(f, all);
  Report r;

  r.expect_equal("oracle:size", "", all.size(), guarded_power(f.order(), code.dim_f(), budget, "oracle"));
  const CodeParams fast = params(code, budget);
  const oracle::Params slow = oracle::params(inst, budget);
  r.expect_equal("oracle:k", "", fast.k, slow.k);
  r.expect_equal("oracle:s", "", fast.s, slow.s);
  r.expect_equal("oracle:d", "", opt(fast.d), opt(slow.d));
  r.expect_equal("oracle:maxwt", "", fast.maxwt, slow.maxwt);
  r.expect_equal("oracle:radical", "", rad == elements(code.radical(), budget), true);
  r.expect_equal("oracle:perp", "", oracle::perp(inst, budget) == elements(perp(code.space()), budget), true);
  r.expect_equal("oracle:distribution", "", weight_distribution(code.space(), budget).counts,
                 oracle::distribution(inst, budget));
  r.expect_equal("oracle:moments", "", binomial_moments(code.space(), budget).counts,
                 oracle::moments(inst, budget));

  guarded_power(2, code.n(), budget, "oracle support scan");
  Tally ab("oracle:alpha-beta");
  Tally pu("oracle:puncture");
  Tally sh("oracle:shorten");
  for_each_support(code.n(), [&](const Support& j) {
    const Anticode a(j);
    const auto brute = oracle::alpha_beta(f, all, rad, j.bits());
    const std::string where = "J=" + j.to_string();
    ab.record(brute.alpha == alpha(code, a) && brute.beta == beta(code, a), where);
    pu.record(oracle::puncture(all, j.bits()) == elements(puncture(code.space(), a), budget), where);
    sh.record(oracle::shorten(all, j.bits()) == elements(shorten(code.space(), a), budget), where);
    return true;
  });
  ab.flush(r, "all supports");
  pu.flush(r, "all supports");
  sh.flush(r, "all supports");
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all", "identities", "bounds", "cleaning",
                                              "enumerators", "oracle"};
  return names;
}

Report run_suite(const std::string& suite, const Code& code,
                 std::span<const SympVector> radical_spanning, std::uint64_t budget) {
  const bool all = suite == "all";
  if (!all && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw InvalidArgument("unknown suite '" + suite + "'");
  }
  Report r;
  if (all || suite == "identities") r.append(identities_suite(code));
  if (all || suite == "bounds") r.append(verify_bounds(code, budget));
  if (all || suite == "cleaning") r.append(cleaning_suite(code, radical_spanning, budget));
  if (all || suite == "enumerators") r.append(enumerator_suite(code, budget));
  if (all || suite == "oracle") r.append(oracle_suite(code, budget));
  return r;
}

VerifyResult verify(const std::vector<NamedCode>& codes, const VerifyOptions& options) {
  std::vector<NamedCode> queue = codes;
  Rng rng(options.seed);
  for (std::size_t i = 0; i < options.random_codes; ++i) {
    const PrimeField f(options.q.value_or(i % 2 == 0 ? 2 : 3));
    const std::size_t n = rng.between(1, 3);
    queue.push_back({"random-" + std::to_string(i), Code(random_subspace(rng, f, n)), {}});
  }
  for (std::size_t i = 0; i < options.random_codes; ++i) {
    const PrimeField f(options.q.value_or(i % 2 == 0 ? 2 : 3));
    const std::size_t n = rng.between(1, 4);
    queue.push_back({"random-stabilizer-" + std::to_string(i), random_stabilizer_code(rng, f, n), {}});
  }

  VerifyResult result;
  Json list = Json::array();
  std::size_t checks = 0;
  std::size_t na = 0;
  for (const auto& item : queue) {
    const Report report = run_suite(options.suite, item.code, item.radical_spanning, options.budget);
    Json entry;
    entry["name"] = item.name;
    entry["code"] = to_json(item.code.space());
    entry["parameters"] = to_json(params(item.code, options.budget));
    entry["report"] = to_json(report);
    list.push_back(std::move(entry));
    checks += report.checks.size();
    result.failures += report.failures();
    na += static_cast<std::size_t>(std::count_if(report.checks.begin(), report.checks.end(),
                                                 [](const Check& c) { return !c.pass; }));
    result.reports.emplace_back(item.name, report);
  }
  Json& j = result.json;
  j["suite"] = options.suite;
  j["seed"] = options.seed;
  j["codes"] = std::move(list);
  j["summary"] = {{"codes", queue.size()},
                  {"checks", checks},
                  {"failures", result.failures},
                  {"not_applicable", na}};
  return result;
}

}  // namespace qsymp
