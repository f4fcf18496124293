#include "qsymp/enumerators.hpp"

#include <limits>

#include "qsymp/anticodes.hpp"

namespace qsymp {

namespace {

std::int64_t checked_pow(std::int64_t q, std::size_t e) {
  std::int64_t v = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (v > std::numeric_limits<std::int64_t>::max() / q) {
      throw InvalidArgument("integer overflow in q^" + std::to_string(e));
    }
    v *= q;
  }
  return v;
}

std::string monomial(char var, std::size_t power) {
  if (power == 0) return {};
  if (power == 1) return std::string(1, var);
  return std::string(1, var) + "^" + std::to_string(power);
}

}  // namespace

std::int64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::int64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<std::int64_t>(n - k + i) / static_cast<std::int64_t>(i);
  return r;
}

std::int64_t EnumeratorPoly::evaluate(std::int64_t x, std::int64_t y) const {
  std::int64_t total = 0;
  const std::size_t n = degree();
  for (std::size_t a = 0; a <= n; ++a) {
    std::int64_t term = coeffs_[a];
    for (std::size_t i = 0; i < a; ++i) term *= x;
    for (std::size_t i = 0; i < n - a; ++i) term *= y;
    total += term;
  }
  return total;
}

std::string EnumeratorPoly::to_string() const {
  std::string out;
  const std::size_t n = degree();
  for (std::size_t a = 0; a <= n; ++a) {
    const std::int64_t c = coeffs_[a];
    if (c == 0) continue;
    const std::string mono = monomial('x', a) + monomial('y', n - a);
    const std::int64_t mag = c < 0 ? -c : c;
    if (out.empty()) {
      out += c < 0 ? "-" : "";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || mono.empty()) out += std::to_string(mag);
    out += mono;
  }
  return out.empty() ? "0" : out;
}

DistributionTable weight_distribution(const SympSubspace& space, std::uint64_t budget) {
  DistributionTable t{std::vector<std::int64_t>(space.n() + 1, 0)};
  for_each_codeword(space, budget, [&](const SympVector& v) { ++t.counts[v.weight()]; });
  return t;
}

std::int64_t anticode_moment(const SympSubspace& space, const Support& support) {
  return checked_pow(space.field().order(), restrict_to(space, support).dim_f());
}

MomentTable binomial_moments(const SympSubspace& space, std::uint64_t budget) {
  const std::size_t n = space.n();
  guarded_power(2, n, budget, "binomial moments");
  MomentTable t{std::vector<std::int64_t>(n + 1, 0)};
  for_each_support(n, [&](const Support& j) {
    t.counts[j.size()] += anticode_moment(space, j);
    return true;
  });
  return t;
}

MomentTable moments_from_distribution(const DistributionTable& w) {
  const std::size_t n = w.counts.size() - 1;
  MomentTable b{std::vector<std::int64_t>(n + 1, 0)};
  for (std::size_t bi = 0; bi <= n; ++bi) {
    for (std::size_t a = 0; a <= bi; ++a) b.counts[bi] += binomial(n - a, bi - a) * w.counts[a];
  }
  return b;
}

DistributionTable distribution_from_moments(const MomentTable& b) {
  const std::size_t n = b.counts.size() - 1;
  DistributionTable w{std::vector<std::int64_t>(n + 1, 0)};
  for (std::size_t a = 0; a <= n; ++a) {
    for (std::size_t bi = 0; bi <= a; ++bi) {
      const std::int64_t sign = ((a - bi) % 2 == 0) ? 1 : -1;
      w.counts[a] += sign * binomial(n - bi, a - bi) * b.counts[bi];
    }
  }
  return w;
}

EnumeratorPair enumerator_polys(const Code& code, std::uint64_t budget) {
  return {EnumeratorPoly(weight_distribution(code.radical(), budget).counts),
          EnumeratorPoly(weight_distribution(code.space(), budget).counts)};
}

EnumeratorPoly b_poly_from_moments(const MomentTable& moments) {
  const std::size_t n = moments.counts.size() - 1;
  std::vector<std::int64_t> coeffs(n + 1, 0);
  for (std::size_t b = 0; b <= n; ++b) {
    // x^b (y - x)^{n-b} = sum_i binom(n-b, i) (-1)^i x^{b+i} y^{n-b-i}
    for (std::size_t i = 0; i <= n - b; ++i) {
      const std::int64_t sign = (i % 2 == 0) ? 1 : -1;
      coeffs[b + i] += sign * binomial(n - b, i) * moments.counts[b];
    }
  }
  return EnumeratorPoly(std::move(coeffs));
}

std::optional<std::size_t> distance_from_enumerators(const EnumeratorPoly& a,
                                                     const EnumeratorPoly& b) {
  if (a.degree() != b.degree()) throw DimensionMismatch("enumerators of different lengths");
  for (std::size_t i = 0; i <= a.degree(); ++i) {
    if (b.coeffs()[i] != a.coeffs()[i]) return i;
  }
  return std::nullopt;
}

Report macwilliams_check(const Code& code, std::uint64_t budget) {
  const std::size_t n = code.n();
  const std::int64_t q = code.field().order();
  const SympSubspace dual = perp(code.space());
  const std::size_t dim_f = code.dim_f();
  const std::int64_t q_dim = checked_pow(q, dim_f);
  guarded_power(2, n, budget, "MacWilliams check");
  Report report;

  // B_A(C^perp) = q^{2 dim(A) - dim_F(C)} B_{A^perp}(C), cleared of the denominator.
  std::size_t good = 0;
  std::size_t tested = 0;
  std::string first_bad;
  for_each_support(n, [&](const Support& j) {
    ++tested;
    const std::int64_t lhs = anticode_moment(dual, j) * q_dim;
    const std::int64_t rhs = checked_pow(q, 2 * j.size()) * anticode_moment(code.space(), j.complement());
    if (lhs == rhs) {
      ++good;
    } else if (first_bad.empty()) {
      first_bad = "fails at J=" + j.to_string();
    }
    return true;
  });
  report.add({"macwilliams:per-anticode", "all supports", good, tested, good == tested, first_bad});

  const MomentTable bc = binomial_moments(code.space(), budget);
  const MomentTable bd = binomial_moments(dual, budget);
  for (std::size_t b = 0; b <= n; ++b) {
    report.expect_equal("macwilliams:aggregate", "b=" + std::to_string(b), bd.counts[b] * q_dim,
                        checked_pow(q, 2 * b) * bc.counts[n - b]);
  }

  const std::size_t k = code.k();
  const std::int64_t q_2k = checked_pow(q, 2 * k);
  for (std::size_t b = 0; b <= n; ++b) {
    const std::string inst = "b=" + std::to_string(b);
    const std::int64_t lhs = bd.counts[b] * q_2k;
    const std::int64_t rhs = checked_pow(q, 2 * b) * bc.counts[n - b];
    if (dim_f == 2 * k) {
      report.expect_equal("macwilliams:exponent-2(b-k)", inst, lhs, rhs);
    } else {
      report.add({"macwilliams:exponent-2(b-k)", inst, lhs, rhs, std::nullopt,
                  std::string("applies when rad(C) = 0; here the values ") +
                      (lhs == rhs ? "agree" : "differ")});
    }
  }
  return report;
}

}  // namespace qsymp
