// qsymp: command-line front end for the symplectic code toolkit.
//
// Exit codes: 0 all checks pass, 1 an identity failed, 2 the step budget was
// exceeded, 3 the input could not be used.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qsymp/anticodes.hpp"
#include "qsymp/codes.hpp"
#include "qsymp/enumerators.hpp"
#include "qsymp/invariants.hpp"
#include "qsymp/io.hpp"
#include "qsymp/suites.hpp"

namespace {

using namespace qsymp;

constexpr int kExitFailure = 1;
constexpr int kExitBudget = 2;
constexpr int kExitInput = 3;

struct InputOptions {
  std::string pauli;
  std::string json;
  std::string matrix;
  std::string fixture;
  std::string role;  // empty: the format's default
  std::size_t n = 0;
  std::optional<std::uint32_t> q;
  std::optional<std::uint64_t> budget;
  std::string format = "json";

  bool has_input() const {
    return !pauli.empty() || !json.empty() || !matrix.empty() || !fixture.empty();
  }
  std::uint64_t step_budget() const { return budget.value_or(default_budget()); }
};

struct Loaded {
  std::string source;
  std::string role;
  SympSubspace input;
  Code code;
  std::optional<SubsystemCode> subsystem;
  std::vector<SympVector> radical_spanning;
};

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  return in;
}

Loaded from_role(std::string source, const std::string& role, const SympSubspace& input,
                 std::vector<SympVector> generators) {
  if (role == "stabilizer") {
    Code code = generators.empty() ? stabilizer_code_from_isotropic(input)
                                   : stabilizer_code_from_generators(input.field(), input.n(), generators);
    return {std::move(source), role, input, std::move(code), std::nullopt, std::move(generators)};
  }
  if (role == "gauge") {
    SubsystemCode sub = subsystem_from_gauge(Code(input));
    Code normalizer = sub.normalizer;
    return {std::move(source), role, input, std::move(normalizer), std::move(sub), {}};
  }
  if (role == "code") return {std::move(source), role, input, Code(input), std::nullopt, {}};
  throw InvalidArgument("--as must be stabilizer, gauge or code");
}

Loaded load_fixture(const std::string& name) {
  const std::string source = "fixture:" + name;
  if (name == "repetition") {
    auto gens = parse_pauli_list(fixtures::repetition_stabilizer());
    return from_role(source, "stabilizer", from_pauli(fixtures::repetition_stabilizer()), gens);
  }
  if (name == "bacon-shor") {
    return from_role(source, "gauge", fixtures::bacon_shor_gauge().space(), {});
  }
  if (name == "shor") {
    auto gens = parse_pauli_list(fixtures::shor_stabilizer());
    return from_role(source, "stabilizer", from_pauli(fixtures::shor_stabilizer()), gens);
  }
  throw InvalidArgument("unknown fixture '" + name + "' (repetition, bacon-shor, shor)");
}

Loaded load(const InputOptions& opt) {
  const int given = !opt.pauli.empty() + !opt.json.empty() + !opt.matrix.empty() + !opt.fixture.empty();
  if (given == 0) throw InvalidArgument("no input: use --pauli, --json, --matrix or --fixture");
  if (given > 1) throw InvalidArgument("give exactly one of --pauli, --json, --matrix, --fixture");

  Loaded loaded = [&]() -> Loaded {
    if (!opt.fixture.empty()) {
      if (!opt.role.empty()) throw InvalidArgument("--as does not apply to fixtures");
      return load_fixture(opt.fixture);
    }
    if (!opt.pauli.empty()) {
      auto in = open_file(opt.pauli);
      auto gens = read_pauli_file(in);
      std::size_t n = gens.empty() ? opt.n : gens.front().n();
      if (gens.empty() && n == 0) throw InvalidArgument("empty generator list needs --n");
      const SympSubspace input = SympSubspace::span(PrimeField(2), n, gens);
      return from_role(opt.pauli, opt.role.empty() ? "stabilizer" : opt.role, input, gens);
    }
    if (!opt.json.empty()) {
      auto in = open_file(opt.json);
      Json j;
      try {
        j = Json::parse(in);
      } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), 0);
      }
      const SympSubspace input = subspace_from_json(j);
      return from_role(opt.json, opt.role.empty() ? role_from_json(j) : opt.role, input, {});
    }
    auto in = open_file(opt.matrix);
    const Matrix m = read_matrix(in);
    if (m.cols() % 2 != 0) throw ParseError("matrix needs an even number of columns", 1);
    const SympSubspace input(m.cols() / 2, m);
    return from_role(opt.matrix, opt.role.empty() ? "code" : opt.role, input, {});
  }();

  if (opt.q && *opt.q != loaded.code.field().order()) {
    throw InvalidArgument("--q " + std::to_string(*opt.q) + " does not match the input field F_" +
                          std::to_string(loaded.code.field().order()));
  }
  return loaded;
}

void add_input_options(CLI::App* cmd, InputOptions& opt, bool formats = true) {
  cmd->add_option("--pauli", opt.pauli, "Pauli generator file (q = 2)");
  cmd->add_option("--json", opt.json, "Subspace/code JSON file");
  cmd->add_option("--matrix", opt.matrix, "Matrix text file (q rows cols, then rows)");
  cmd->add_option("--fixture", opt.fixture, "Built-in code: repetition, bacon-shor, shor");
  cmd->add_option("--as", opt.role, "How to read the generators")
      ->check(CLI::IsMember({"stabilizer", "gauge", "code"}));
  cmd->add_option("--n", opt.n, "Number of factors for an empty generator list");
  cmd->add_option("--q", opt.q, "Expected field order");
  cmd->add_option("--budget", opt.budget, "Step budget for exhaustive scans");
  if (formats) {
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "table"}));
  }
}

std::string dump(const Json& j) { return j.dump(2); }

std::string cell(const Json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

Json parameters_json(const Loaded& l, std::uint64_t budget) {
  Json p = to_json(params(l.code, budget));
  if (l.subsystem) p["logical_count"] = l.subsystem->logical_count;
  p["stabilizer"] = l.code.is_stabilizer();
  return p;
}

Json identity_json(const Loaded& l) {
  Json j;
  j["source"] = l.source;
  j["q"] = l.code.field().order();
  j["n"] = l.code.n();
  j["role"] = l.role;
  return j;
}

void print_params(const Json& p, const std::string& format) {
  std::vector<std::string> keys;
  for (const auto& [key, value] : p.items()) keys.push_back(key);
  if (format == "csv") {
    for (std::size_t i = 0; i < keys.size(); ++i) std::cout << (i ? "," : "") << keys[i];
    std::cout << "\n";
    for (std::size_t i = 0; i < keys.size(); ++i) std::cout << (i ? "," : "") << cell(p[keys[i]]);
    std::cout << "\n";
    return;
  }
  for (const auto& key : keys) std::cout << std::left << std::setw(14) << key << cell(p[key]) << "\n";
}

void print_report_lines(const Report& report) {
  for (const auto& c : report.checks) {
    const char* status = !c.pass ? "n/a " : (*c.pass ? "PASS" : "FAIL");
    std::cout << status << "  " << c.identity;
    if (!c.instance.empty()) std::cout << " [" << c.instance << "]";
    std::cout << "  lhs=" << cell(c.lhs) << " rhs=" << cell(c.rhs);
    if (!c.note.empty()) std::cout << "  (" << c.note << ")";
    std::cout << "\n";
  }
}

void print_report_csv(const Report& report) {
  std::cout << "identity,instance,lhs,rhs,pass\n";
  auto quote = [](std::string s) {
    std::string out = "\"";
    for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return out + "\"";
  };
  for (const auto& c : report.checks) {
    std::cout << c.identity << "," << quote(c.instance) << "," << quote(cell(c.lhs)) << ","
              << quote(cell(c.rhs)) << "," << (!c.pass ? "n/a" : (*c.pass ? "true" : "false")) << "\n";
  }
}

int cmd_import(const InputOptions& opt) {
  const Loaded l = load(opt);
  Json out = identity_json(l);
  out["input"] = to_json(l.input);
  Json code = to_json(l.code.space());
  code["role"] = "code";
  out["code"] = code;
  if (l.subsystem) out["stabilizer"] = to_json(l.subsystem->stabilizer);
  out["parameters"] = parameters_json(l, opt.step_budget());
  std::cout << dump(out) << "\n";
  return 0;
}

int cmd_analyze(const InputOptions& opt) {
  const Loaded l = load(opt);
  const Json p = parameters_json(l, opt.step_budget());
  if (opt.format == "json") {
    Json out = identity_json(l);
    out["parameters"] = p;
    std::cout << dump(out) << "\n";
  } else {
    print_params(p, opt.format);
  }
  return 0;
}

int cmd_invariants(const InputOptions& opt) {
  const Loaded l = load(opt);
  const InvariantTable table = invariant_table(l.code, opt.step_budget());
  if (opt.format == "json") {
    Json out = identity_json(l);
    out["invariants"] = to_json(table);
    std::cout << dump(out) << "\n";
  } else if (opt.format == "csv") {
    std::cout << "b,theta,phi\n";
    for (std::size_t b = 0; b < table.profiles.theta.size(); ++b) {
      std::cout << b << "," << table.profiles.theta[b] << "," << table.profiles.phi[b] << "\n";
    }
    auto opt_cell = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string("-"); };
    std::cout << "a,vartheta,varphi,delta\n";
    for (std::size_t a = 0; a < table.weights.vartheta.size(); ++a) {
      std::cout << a + 1 << "," << opt_cell(table.weights.vartheta[a]) << ","
                << opt_cell(table.weights.varphi[a]) << "," << opt_cell(table.weights.delta[a]) << "\n";
    }
  } else {
    std::cout << to_ascii(table);
  }
  return 0;
}

int cmd_enumerator(const InputOptions& opt) {
  const Loaded l = load(opt);
  const std::uint64_t budget = opt.step_budget();
  const DistributionTable w = weight_distribution(l.code.space(), budget);
  const MomentTable b = binomial_moments(l.code.space(), budget);
  const EnumeratorPair polys = enumerator_polys(l.code, budget);
  if (opt.format == "json") {
    Json out = identity_json(l);
    out["W"] = to_json(w);
    out["B"] = to_json(b);
    out["A_poly"] = to_json(polys.a);
    out["B_poly"] = to_json(polys.b);
    out["A_poly_text"] = polys.a.to_string();
    out["B_poly_text"] = polys.b.to_string();
    std::cout << dump(out) << "\n";
  } else if (opt.format == "csv") {
    std::cout << "a,W,B,A_poly,B_poly\n";
    for (std::size_t a = 0; a < w.counts.size(); ++a) {
      std::cout << a << "," << w.counts[a] << "," << b.counts[a] << "," << polys.a.coeffs()[a] << ","
                << polys.b.coeffs()[a] << "\n";
    }
  } else {
    std::cout << "A(x,y) = " << polys.a.to_string() << "\n";
    std::cout << "B(x,y) = " << polys.b.to_string() << "\n";
  }
  return 0;
}

int cmd_moments(const InputOptions& opt, bool check) {
  const Loaded l = load(opt);
  const std::uint64_t budget = opt.step_budget();
  const MomentTable b = binomial_moments(l.code.space(), budget);
  const MomentTable bd = binomial_moments(perp(l.code.space()), budget);
  std::optional<Report> report;
  if (check) report = macwilliams_check(l.code, budget);
  if (opt.format == "json") {
    Json out = identity_json(l);
    out["B"] = to_json(b);
    out["B_dual"] = to_json(bd);
    if (report) out["macwilliams"] = to_json(*report);
    std::cout << dump(out) << "\n";
  } else {
    std::cout << "b,B,B_dual\n";
    for (std::size_t i = 0; i < b.counts.size(); ++i) {
      std::cout << i << "," << b.counts[i] << "," << bd.counts[i] << "\n";
    }
    if (report) {
      if (opt.format == "csv") {
        print_report_csv(*report);
      } else {
        print_report_lines(*report);
      }
    }
  }
  return report && !report->ok() ? kExitFailure : 0;
}

Json span_json(const SympSubspace& w) {
  Json j = to_json(w);
  Json text = Json::array();
  for (const auto& v : w.basis_vectors()) text.push_back(describe(v));
  j["span"] = text;
  j["dim"] = w.sym_dim();
  j["irk"] = w.isorank();
  return j;
}

Json vectors_json(const std::vector<SympVector>& vs) {
  Json text = Json::array();
  for (const auto& v : vs) text.push_back(describe(v));
  return text;
}

int cmd_puncture(const InputOptions& opt, const std::string& support_text) {
  const Loaded l = load(opt);
  const Support j = Support::parse(l.code.n(), support_text);
  const Anticode a(j);
  const SPrimeDecomposition dec = s_prime_decompose(l.code, a, l.radical_spanning);
  const SympSubspace s_prime = SympSubspace::span(l.code.field(), l.code.n(), dec.s_prime);

  Json out = identity_json(l);
  out["support"] = j.to_string();
  out["puncture"] = span_json(puncture(l.code.space(), a));
  out["shorten"] = span_json(shorten(l.code.space(), a));
  Json sp;
  sp["rad_in_a"] = vectors_json(dec.rad_in_a);
  sp["rad_in_a_perp"] = vectors_json(dec.rad_in_aperp);
  sp["s_prime"] = vectors_json(dec.s_prime);
  sp["puncture_a"] = span_json(puncture(s_prime, a));
  sp["puncture_a_perp"] = span_json(puncture(s_prime, a.complement()));
  out["radical_split"] = sp;

  if (opt.format == "json") {
    std::cout << dump(out) << "\n";
    return 0;
  }
  auto line = [](const std::string& label, const Json& span) {
    std::cout << std::left << std::setw(20) << label << "span{";
    for (std::size_t i = 0; i < span.size(); ++i) std::cout << (i ? ", " : "") << span[i].get<std::string>();
    std::cout << "}\n";
  };
  line("puncture", out["puncture"]["span"]);
  line("shorten", out["shorten"]["span"]);
  line("rad(C) in A", sp["rad_in_a"]);
  line("rad(C) in A^perp", sp["rad_in_a_perp"]);
  line("S'", sp["s_prime"]);
  line("Pi_A S'", sp["puncture_a"]["span"]);
  line("Pi_A^perp S'", sp["puncture_a_perp"]["span"]);
  return 0;
}

int cmd_verify(const InputOptions& opt, const std::string& suite, std::uint64_t seed,
               std::size_t random_codes) {
  VerifyOptions vo;
  vo.suite = suite;
  vo.seed = seed;
  vo.budget = opt.step_budget();
  vo.q = opt.q;
  std::vector<NamedCode> codes;
  if (opt.has_input()) {
    InputOptions checked = opt;
    const Loaded l = load(checked);
    codes.push_back({l.source, l.code, l.radical_spanning});
    vo.random_codes = 0;
  } else {
    codes = fixture_codes();
    vo.random_codes = random_codes;
  }
  const VerifyResult result = verify(codes, vo);

  if (opt.format == "json") {
    std::cout << dump(result.json) << "\n";
  } else {
    for (const auto& [name, r] : result.reports) {
      std::cout << "# " << name << "\n";
      if (opt.format == "csv") {
        print_report_csv(r);
      } else {
        print_report_lines(r);
      }
    }
    const auto& s = result.json["summary"];
    std::cout << "# checks " << s["checks"] << ", failures " << s["failures"] << ", n/a "
              << s["not_applicable"] << "\n";
  }
  return result.failures == 0 ? 0 : kExitFailure;
}

int cmd_export(const InputOptions& opt, const std::string& to) {
  const Loaded l = load(opt);
  if (to == "matrix") {
    write_matrix(std::cout, l.code.space().basis());
  } else {
    Json j = to_json(l.code.space());
    j["role"] = "code";
    std::cout << dump(j) << "\n";
  }
  return 0;
}

void print_error(const std::string& kind, const std::string& message, Json extra = Json::object()) {
  Json err;
  err["kind"] = kind;
  err["message"] = message;
  for (const auto& [k, v] : extra.items()) err[k] = v;
  Json out;
  out["error"] = err;
  std::cout << out.dump(2) << "\n";
  std::cerr << "qsymp: " << message << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symplectic codes over prime fields: parameters, anticode invariants, enumerators"};
  app.require_subcommand(1);

  InputOptions opt;
  std::string support;
  std::string suite = "all";
  std::uint64_t seed = 7;
  std::size_t random_codes = 8;
  bool check_macwilliams = false;
  std::string export_to = "matrix";
  std::string pauli_positional;

  auto* import = app.add_subcommand("import", "Canonicalize a code and echo it as JSON");
  add_input_options(import, opt, false);
  auto* import_pauli = app.add_subcommand("import-pauli", "Import a Pauli generator file");
  import_pauli->add_option("file", pauli_positional, "Pauli generator file")->required();
  add_input_options(import_pauli, opt, false);
  auto* analyze = app.add_subcommand("analyze", "Code parameters (n, k, s, d, maxwt)");
  add_input_options(analyze, opt);
  auto* invariants = app.add_subcommand("invariants", "Profiles and generalized weights");
  add_input_options(invariants, opt);
  auto* enumerator = app.add_subcommand("enumerator", "Weight distribution and enumerators");
  add_input_options(enumerator, opt);
  auto* moments = app.add_subcommand("moments", "Binomial moments of C and C^perp");
  add_input_options(moments, opt);
  moments->add_flag("--check-macwilliams", check_macwilliams, "Verify the moment duality");
  auto* punct = app.add_subcommand("puncture", "Puncture, shorten and split rad(C) along a support");
  add_input_options(punct, opt);
  punct->add_option("--support", support, "1-based factor indices, e.g. 1,2,3,4")->required();
  auto* verify_cmd = app.add_subcommand("verify", "Run identity suites");
  add_input_options(verify_cmd, opt);
  verify_cmd->add_option("--suite", suite, "Suite to run")->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--seed", seed, "Seed for the random codes");
  verify_cmd->add_option("--random", random_codes, "Random codes of each kind");
  auto* export_cmd = app.add_subcommand("export", "Write the code basis");
  add_input_options(export_cmd, opt, false);
  export_cmd->add_option("--to", export_to, "matrix or json")->check(CLI::IsMember({"matrix", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*import) return cmd_import(opt);
    if (*import_pauli) {
      opt.pauli = pauli_positional;
      return cmd_import(opt);
    }
    if (*analyze) return cmd_analyze(opt);
    if (*invariants) return cmd_invariants(opt);
    if (*enumerator) return cmd_enumerator(opt);
    if (*moments) return cmd_moments(opt, check_macwilliams);
    if (*punct) return cmd_puncture(opt, support);
    if (*verify_cmd) return cmd_verify(opt, suite, seed, random_codes);
    if (*export_cmd) return cmd_export(opt, export_to);
  } catch (const BudgetExceeded& e) {
    print_error("budget_exceeded", e.what(), {{"required", e.required()}, {"budget", e.budget()}});
    return kExitBudget;
  } catch (const ParseError& e) {
    Json extra = Json::object();
    if (e.line() != 0) extra["line"] = e.line();
    print_error("parse_error", e.what(), extra);
    return kExitInput;
  } catch (const CommutationViolation& e) {
    print_error("commutation_violation", e.what(),
                {{"generators", Json::array({e.first() + 1, e.second() + 1})}});
    return kExitInput;
  } catch (const Error& e) {
    print_error("input_error", e.what());
    return kExitInput;
  }
  return kExitInput;
}
