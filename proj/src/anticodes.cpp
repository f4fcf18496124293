#include "qsymp/anticodes.hpp"

namespace qsymp {

Anticode anticode(std::size_t n, const std::vector<std::size_t>& indices) {
  return Anticode(Support::from_indices(n, indices));
}

SympSubspace project(const SympSubspace& w, const Support& support) {
  if (support.ambient() != w.n()) throw DimensionMismatch("support and subspace lengths differ");
  const auto idx = support.indices();
  Matrix m(w.field(), w.dim_f(), 2 * idx.size());
  for (std::size_t r = 0; r < w.dim_f(); ++r) {
    for (std::size_t j = 0; j < idx.size(); ++j) {
      m(r, 2 * j) = w.basis()(r, 2 * idx[j]);
      m(r, 2 * j + 1) = w.basis()(r, 2 * idx[j] + 1);
    }
  }
  return {idx.size(), m};
}

SympSubspace restrict_to(const SympSubspace& w, const Support& support) {
  if (support.ambient() != w.n()) throw DimensionMismatch("support and subspace lengths differ");
  // Coefficient vectors whose combination vanishes off the support.
  const auto outside = support.complement().indices();
  Matrix off(w.field(), 2 * outside.size(), w.dim_f());
  for (std::size_t r = 0; r < w.dim_f(); ++r) {
    for (std::size_t j = 0; j < outside.size(); ++j) {
      off(2 * j, r) = w.basis()(r, 2 * outside[j]);
      off(2 * j + 1, r) = w.basis()(r, 2 * outside[j] + 1);
    }
  }
  const Matrix coeffs = kernel(off);
  const PrimeField& f = w.field();
  Matrix vectors(f, coeffs.rows(), 2 * w.n());
  for (std::size_t r = 0; r < coeffs.rows(); ++r) {
    for (std::size_t i = 0; i < w.dim_f(); ++i) {
      const Scalar c = coeffs(r, i);
      if (c == 0) continue;
      for (std::size_t col = 0; col < 2 * w.n(); ++col) {
        vectors(r, col) = f.add(vectors(r, col), f.mul(c, w.basis()(i, col)));
      }
    }
  }
  return {w.n(), vectors};
}

SympSubspace puncture(const SympSubspace& code, const Anticode& a) {
  return project(code, a.support());
}

SympSubspace shorten(const SympSubspace& code, const Anticode& a) {
  return project(restrict_to(code, a.support()), a.support());
}

namespace {

Json basis_json(const SympSubspace& w) { return w.basis().to_rows(); }

// A basis vector of `a` missing from `b`, if any, for failure notes.
std::string witness(const SympSubspace& a, const SympSubspace& b, const char* label) {
  for (const auto& v : a.basis_vectors()) {
    if (!b.contains(v)) {
      std::string s = std::string(label) + " contains [";
      for (std::size_t i = 0; i < v.coords().size(); ++i) {
        s += (i ? " " : "") + std::to_string(v.coords()[i]);
      }
      return s + "] missing from the other side";
    }
  }
  return {};
}

void expect_same_space(Report& report, const std::string& identity, const std::string& instance,
                       const SympSubspace& lhs, const SympSubspace& rhs) {
  Check c{identity, instance, basis_json(lhs), basis_json(rhs), lhs == rhs, {}};
  if (!*c.pass) {
    c.note = witness(lhs, rhs, "lhs");
    if (c.note.empty()) c.note = witness(rhs, lhs, "rhs");
  }
  report.add(std::move(c));
}

}  // namespace

Report verify_cleaning(const Code& code, const Anticode& a, std::optional<std::size_t> distance) {
  const SympSubspace& c = code.space();
  const SympSubspace c_perp = perp(c);
  const std::string instance = "J=" + a.support().to_string();
  Report report;
  expect_same_space(report, "cleaning:shorten-perp", instance, shorten(c_perp, a),
                    perp(puncture(c, a)));
  expect_same_space(report, "cleaning:puncture-perp", instance, puncture(c_perp, a),
                    perp(shorten(c, a)));
  report.expect_equal("cleaning:shorten-in-puncture", instance,
                      shorten(c, a).is_subspace_of(puncture(c, a)), true);
  if (distance && a.dim() < *distance) {
    if (code.is_stabilizer()) {
      expect_same_space(report, "cleaning:below-distance", instance, puncture(c, a),
                        puncture(code.radical(), a));
    } else {
      report.not_applicable("cleaning:below-distance", instance, "requires rad(C) = C^perp");
    }
  }
  return report;
}

SPrimeDecomposition s_prime_decompose(const Code& code, const Anticode& a,
                                      std::span<const SympVector> radical_spanning) {
  const SympSubspace& rad = code.radical();
  const SympSubspace in_a = restrict_to(rad, a.support());
  const SympSubspace in_aperp = restrict_to(rad, a.complement().support());

  std::vector<SympVector> candidates;
  if (radical_spanning.empty()) {
    candidates = rad.basis_vectors();
  } else {
    candidates.assign(radical_spanning.begin(), radical_spanning.end());
    for (const auto& v : candidates) {
      if (!rad.contains(v)) throw InvalidArgument("spanning vector outside rad(C)");
    }
  }

  SPrimeDecomposition dec{in_a.basis_vectors(), in_aperp.basis_vectors(), {}};
  Matrix current = sum(in_a.basis(), in_aperp.basis());
  for (const auto& v : candidates) {
    if (row_space_contains(current, v.coords())) continue;
    current = sum(current, to_matrix(rad.field(), rad.n(), std::span(&v, 1)));
    dec.s_prime.push_back(v);
  }
  if (current.rows() != rad.dim_f()) {
    throw InvalidArgument("spanning list does not span rad(C)");
  }
  return dec;
}

Report check_s_prime(const Code& code, const Anticode& a, const SPrimeDecomposition& dec) {
  const PrimeField& f = code.field();
  const std::size_t n = code.n();
  const std::string instance = "J=" + a.support().to_string();
  Report report;

  std::vector<SympVector> all = dec.rad_in_a;
  all.insert(all.end(), dec.rad_in_aperp.begin(), dec.rad_in_aperp.end());
  all.insert(all.end(), dec.s_prime.begin(), dec.s_prime.end());
  const SympSubspace spanned = SympSubspace::span(f, n, all);
  report.expect_equal("s-prime:direct-sum-dimension", instance, all.size(),
                      code.radical().dim_f());
  report.expect_equal("s-prime:spans-radical", instance, spanned == code.radical(), true);

  bool orthogonal = true;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i; j < all.size(); ++j) orthogonal = orthogonal && form(all[i], all[j]) == 0;
  }
  report.expect_equal("s-prime:isotropic-orthogonal", instance, orthogonal, true);

  const SympSubspace s_prime = SympSubspace::span(f, n, dec.s_prime);
  report.expect_equal("s-prime:projection-injective", instance,
                      project(s_prime, a.support()).dim_f(), s_prime.dim_f());
  return report;
}

Report complementarity_check(const Code& code, const Anticode& a,
                             std::span<const SympVector> radical_spanning) {
  const Anticode ac = a.complement();
  const std::string instance = "J=" + a.support().to_string();
  const SPrimeDecomposition dec = s_prime_decompose(code, a, radical_spanning);
  const SympSubspace s_prime = SympSubspace::span(code.field(), code.n(), dec.s_prime);
  const SympSubspace& s = code.radical();

  Report report = check_s_prime(code, a, dec);
  const SympSubspace pa = puncture(s_prime, a);
  const SympSubspace pac = puncture(s_prime, ac);
  report.expect_equal("s-prime:dim", instance, pa.sym_dim(), pac.sym_dim());
  report.expect_equal("s-prime:irk", instance, pa.isorank(), pac.isorank());

  const SympSubspace ps = puncture(s, a);
  const SympSubspace psc = puncture(s, ac);
  const SympSubspace ss = shorten(s, a);
  const SympSubspace ssc = shorten(s, ac);
  report.expect_equal("complementarity:dim", instance, ps.sym_dim(), psc.sym_dim());
  report.expect_equal("complementarity:irk", instance,
                      static_cast<long long>(ps.isorank()) - static_cast<long long>(ss.isorank()),
                      static_cast<long long>(psc.isorank()) -
                          static_cast<long long>(ssc.isorank()));

  if (!code.is_stabilizer()) {
    for (const char* id : {"stabilizer-complementarity:dim", "stabilizer-complementarity:irk",
                           "stabilizer-complementarity"}) {
      report.not_applicable(id, instance, "requires rad(C) = C^perp");
    }
    return report;
  }
  const SympSubspace sc = shorten(code.space(), a);
  const SympSubspace scc = shorten(code.space(), ac);
  auto ll = [](std::size_t v) { return static_cast<long long>(v); };
  report.expect_equal("stabilizer-complementarity:dim", instance,
                      ll(a.dim()) - ll(sc.isorank()), ll(ac.dim()) - ll(scc.isorank()));
  report.expect_equal("stabilizer-complementarity:irk", instance,
                      ll(a.dim()) - ll(sc.sym_dim()) - ll(ss.isorank()),
                      ll(ac.dim()) - ll(scc.sym_dim()) - ll(ssc.isorank()));
  report.expect_equal("stabilizer-complementarity", instance,
                      ll(sc.isorank()) - ll(ss.isorank()) - ll(sc.sym_dim()),
                      ll(scc.isorank()) - ll(ssc.isorank()) - ll(scc.sym_dim()));
  return report;
}

}  // namespace qsymp
