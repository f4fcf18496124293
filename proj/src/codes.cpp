#include "qsymp/codes.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <limits>

namespace qsymp {

std::uint64_t default_budget() {
  if (const char* env = std::getenv("QSYMP_BUDGET")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
  }
  return kDefaultBudget;
}

std::uint64_t guarded_power(std::uint64_t q, std::size_t exponent, std::uint64_t budget,
                            const std::string& what) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t value = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    // Saturate on overflow; the exact count is reported whenever it fits.
    value = value > kMax / q ? kMax : value * q;
  }
  if (value > budget) throw BudgetExceeded(what, value, budget);
  return value;
}

void for_each_combination(
    std::span<const SympVector> generators, std::uint64_t budget,
    const std::function<void(const SympVector&, std::span<const Scalar>)>& visit) {
  if (generators.empty()) return;
  const PrimeField& f = generators.front().field();
  const std::size_t m = generators.size();
  const std::uint64_t total = guarded_power(f.order(), m, budget, "codeword enumeration");

  // Modular Gray code: incrementing the base-q counter at digit i changes the
  // Gray tuple only at i, so the current vector moves by one generator.
  std::vector<Scalar> counter(m, 0);
  std::vector<Scalar> gray(m, 0);
  SympVector current(f, generators.front().n());
  visit(current, gray);
  for (std::uint64_t step = 1; step < total; ++step) {
    std::size_t i = 0;
    while (counter[i] == f.order() - 1) {
      counter[i] = 0;
      ++i;
    }
    ++counter[i];
    gray[i] = f.add(gray[i], 1);
    current += generators[i];
    visit(current, gray);
  }
}

void for_each_codeword(const SympSubspace& space, std::uint64_t budget,
                       const std::function<void(const SympVector&)>& visit) {
  const auto basis = space.basis_vectors();
  if (basis.empty()) {
    visit(SympVector(space.field(), space.n()));
    return;
  }
  for_each_combination(basis, budget,
                       [&](const SympVector& v, std::span<const Scalar>) { visit(v); });
}

std::optional<std::size_t> min_distance(const Code& code, std::uint64_t budget) {
  const auto& split = code.space().split();
  if (split.pairs.empty()) return std::nullopt;

  // Basis ordered as [complement of rad(C) | rad(C)]: a codeword avoids rad(C)
  // iff one of its complement coefficients is nonzero.
  std::vector<SympVector> basis;
  for (const auto& [e, f] : split.pairs) {
    basis.push_back(e);
    basis.push_back(f);
  }
  const std::size_t complement = basis.size();
  basis.insert(basis.end(), split.radical_basis.begin(), split.radical_basis.end());

  std::size_t best = code.n() + 1;
  for_each_combination(basis, budget, [&](const SympVector& v, std::span<const Scalar> coeffs) {
    const bool outside_radical =
        std::any_of(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(complement),
                    [](Scalar c) { return c != 0; });
    if (outside_radical) best = std::min(best, v.weight());
  });
  return best;
}

std::size_t max_weight(const Code& code, std::uint64_t budget) {
  std::size_t best = 0;
  for_each_codeword(code.space(), budget,
                    [&](const SympVector& v) { best = std::max(best, v.weight()); });
  return best;
}

CodeParams params(const Code& code, std::uint64_t budget) {
  CodeParams p;
  p.n = code.n();
  p.k = code.k();
  p.s = code.s();
  p.d = min_distance(code, budget);
  p.maxwt = max_weight(code, budget);
  return p;
}

SubsystemCode subsystem_from_gauge(const Code& gauge) {
  SympSubspace stabilizer = gauge.radical();
  Code normalizer(perp(stabilizer));
  const std::size_t logical = normalizer.k() - gauge.k();
  return {gauge, std::move(stabilizer), std::move(normalizer), logical};
}

Code stabilizer_code_from_isotropic(const SympSubspace& stabilizer) {
  const auto vs = stabilizer.basis_vectors();
  return stabilizer_code_from_generators(stabilizer.field(), stabilizer.n(), vs);
}

Code stabilizer_code_from_generators(PrimeField field, std::size_t n,
                                     std::span<const SympVector> generators) {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = i + 1; j < generators.size(); ++j) {
      if (form(generators[i], generators[j]) != 0) throw CommutationViolation(i, j);
    }
  }
  return Code(perp(SympSubspace::span(field, n, generators)));
}

SympVector parse_pauli(const std::string& text) {
  static const PrimeField f2(2);
  std::size_t pos = text.find_first_not_of(" \t\r");
  if (pos == std::string::npos) throw ParseError("empty Pauli string", 0);
  if (text[pos] == '+' || text[pos] == '-') ++pos;
  if (pos < text.size() && text[pos] == 'i') ++pos;
  const std::size_t end = text.find_last_not_of(" \t\r");
  if (pos > end) throw ParseError("Pauli string has no letters", 0);

  std::vector<Scalar> coords;
  for (std::size_t i = pos; i <= end; ++i) {
    switch (text[i]) {
      case 'I': coords.insert(coords.end(), {0, 0}); break;
      case 'X': coords.insert(coords.end(), {1, 0}); break;
      case 'Z': coords.insert(coords.end(), {0, 1}); break;
      case 'Y': coords.insert(coords.end(), {1, 1}); break;
      default:
        throw ParseError(std::string("malformed Pauli letter '") + text[i] + "'", 0);
    }
  }
  return {f2, std::span<const Scalar>(coords)};
}

std::string to_pauli(const SympVector& v) {
  if (v.field().order() != 2) throw InvalidArgument("Pauli strings require q = 2");
  static constexpr char kLetters[2][2] = {{'I', 'Z'}, {'X', 'Y'}};
  std::string out;
  for (std::size_t i = 0; i < v.n(); ++i) out += kLetters[v.x(i)][v.z(i)];
  return out;
}

std::vector<SympVector> parse_pauli_list(const std::vector<std::string>& generators) {
  std::vector<SympVector> out;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    try {
      out.push_back(parse_pauli(generators[i]));
    } catch (const ParseError& e) {
      throw ParseError(std::string("generator ") + std::to_string(i + 1) + ": " + e.what(), 0);
    }
    if (out.back().n() != out.front().n()) {
      throw ParseError("generator " + std::to_string(i + 1) + " has length " +
                           std::to_string(out.back().n()) + ", expected " +
                           std::to_string(out.front().n()),
                       0);
    }
  }
  return out;
}

SympSubspace from_pauli(const std::vector<std::string>& generators, std::size_t n) {
  static const PrimeField f2(2);
  const auto vs = parse_pauli_list(generators);
  return SympSubspace::span(f2, vs.empty() ? n : vs.front().n(), vs);
}

std::vector<SympVector> read_pauli_file(std::istream& in) {
  std::vector<SympVector> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_pauli(line));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
    if (out.back().n() != out.front().n()) {
      throw ParseError("generator has length " + std::to_string(out.back().n()) +
                           ", expected " + std::to_string(out.front().n()),
                       line_no);
    }
  }
  return out;
}

namespace fixtures {

Code repetition() {
  return stabilizer_code_from_isotropic(from_pauli(repetition_stabilizer()));
}

std::vector<std::string> repetition_stabilizer() { return {"ZZ"}; }

std::vector<std::string> bacon_shor_gauge_generators() {
  return {"XXII", "IIXX", "ZIZI", "IZIZ"};
}

Code bacon_shor_gauge() { return Code(from_pauli(bacon_shor_gauge_generators())); }

Code bacon_shor() { return subsystem_from_gauge(bacon_shor_gauge()).normalizer; }

std::vector<std::string> shor_stabilizer() {
  return {"ZZIIIIIII", "IZZIIIIII", "IIIZZIIII", "IIIIZZIII",
          "IIIIIIZZI", "IIIIIIIZZ", "XXXXXXIII", "IIIXXXXXX"};
}

Code shor() {
  const auto gens = parse_pauli_list(shor_stabilizer());
  return stabilizer_code_from_generators(PrimeField(2), 9, gens);
}

}  // namespace fixtures

}  // namespace qsymp
