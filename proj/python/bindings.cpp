#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qsymp/anticodes.hpp"
#include "qsymp/enumerators.hpp"
#include "qsymp/invariants.hpp"
#include "qsymp/suites.hpp"

namespace py = pybind11;
using namespace qsymp;

namespace {

using Rows = std::vector<std::vector<std::int64_t>>;

std::uint64_t budget_or_default(std::optional<std::uint64_t> budget) {
  return budget ? *budget : default_budget();
}

Rows rows_of(const SympSubspace& w) {
  Rows out;
  for (const auto& v : w.basis_vectors()) {
    const auto c = v.coords();
    out.emplace_back(c.begin(), c.end());
  }
  return out;
}

Code make_code(std::uint32_t q, std::size_t n, const Rows& rows) {
  const PrimeField f(q);
  std::vector<SympVector> vs;
  for (const auto& r : rows) {
    if (r.size() != 2 * n) {
      throw DimensionMismatch("row has " + std::to_string(r.size()) + " entries, expected " +
                              std::to_string(2 * n));
    }
    vs.emplace_back(f, r);
  }
  return Code(SympSubspace::span(f, n, vs));
}

// 1-based factor indices, as in A_{1,2,3,4}.
Anticode anticode_of(std::size_t n, const std::vector<std::size_t>& support) {
  std::vector<std::size_t> idx;
  for (std::size_t i : support) {
    if (i == 0) throw InvalidArgument("support indices start at 1");
    idx.push_back(i - 1);
  }
  return anticode(n, idx);
}

Code fixture(const std::string& name) {
  if (name == "repetition") return fixtures::repetition();
  if (name == "bacon-shor") return fixtures::bacon_shor();
  if (name == "shor") return fixtures::shor();
  throw InvalidArgument("unknown fixture '" + name + "'");
}

py::dict params_dict(const Code& c, std::optional<std::uint64_t> budget) {
  const CodeParams p = params(c, budget_or_default(budget));
  py::dict d;
  d["n"] = p.n;
  d["k"] = p.k;
  d["s"] = p.s;
  d["d"] = p.d ? py::cast(*p.d) : py::none();
  d["maxwt"] = p.maxwt;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Symplectic codes over prime fields";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", error.ptr());
  py::register_exception<InvalidArgument>(m, "InvalidArgument", error.ptr());
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", error.ptr());
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<CommutationViolation>(m, "CommutationViolation", error.ptr());

  py::class_<Code>(m, "Code")
      .def(py::init(&make_code), py::arg("q"), py::arg("n"), py::arg("rows"),
           "Span of the given rows (x1, z1, ..., xn, zn) over F_q.")
      .def_static(
          "from_pauli",
          [](const std::vector<std::string>& gens, std::size_t n) {
            return Code(from_pauli(gens, n));
          },
          py::arg("generators"), py::arg("n") = 0)
      .def_property_readonly("q", [](const Code& c) { return c.field().order(); })
      .def_property_readonly("n", &Code::n)
      .def_property_readonly("k", &Code::k)
      .def_property_readonly("s", &Code::s)
      .def_property_readonly("dim_f", &Code::dim_f)
      .def_property_readonly("is_stabilizer", &Code::is_stabilizer)
      .def_property_readonly("basis", [](const Code& c) { return rows_of(c.space()); })
      .def("radical", [](const Code& c) { return Code(c.radical()); })
      .def("perp", [](const Code& c) { return Code(perp(c.space())); })
      .def("paulis",
           [](const Code& c) {
             std::vector<std::string> out;
             for (const auto& v : c.space().basis_vectors()) out.push_back(to_pauli(v));
             return out;
           })
      .def("__eq__", [](const Code& a, const Code& b) { return a.space() == b.space(); })
      .def("__repr__", [](const Code& c) {
        return "Code(q=" + std::to_string(c.field().order()) + ", n=" + std::to_string(c.n()) +
               ", k=" + std::to_string(c.k()) + ", s=" + std::to_string(c.s()) + ")";
      });

  m.def("fixture", &fixture, py::arg("name"));
  m.def("stabilizer_code",
        [](const std::vector<std::string>& gens, std::size_t n) {
          const auto vs = parse_pauli_list(gens);
          const std::size_t len = vs.empty() ? n : vs.front().n();
          return stabilizer_code_from_generators(PrimeField(2), len, vs);
        },
        py::arg("generators"), py::arg("n") = 0, "Normalizer of the stabilizer group.");
  m.def("subsystem_code",
        [](const std::vector<std::string>& gauge) {
          const SubsystemCode s = subsystem_from_gauge(Code(from_pauli(gauge)));
          return py::make_tuple(s.normalizer, s.logical_count);
        },
        py::arg("gauge"), "(normalizer, number of logical qudits) of a gauge group.");

  m.def("params", &params_dict, py::arg("code"), py::arg("budget") = py::none());
  m.def("profiles",
        [](const Code& c, std::optional<std::uint64_t> budget) {
          const ProfileTable p = profiles(c, budget_or_default(budget));
          py::dict d;
          d["theta"] = p.theta;
          d["phi"] = p.phi;
          return d;
        },
        py::arg("code"), py::arg("budget") = py::none());
  m.def("generalized_weights",
        [](const Code& c, std::optional<std::uint64_t> budget) {
          const WeightTable w = generalized_weights(c, budget_or_default(budget));
          py::dict d;
          d["vartheta"] = w.vartheta;
          d["varphi"] = w.varphi;
          d["delta"] = w.delta;
          return d;
        },
        py::arg("code"), py::arg("budget") = py::none());
  m.def("alpha", [](const Code& c, const std::vector<std::size_t>& j) {
    return alpha(c, anticode_of(c.n(), j));
  });
  m.def("beta", [](const Code& c, const std::vector<std::size_t>& j) {
    return beta(c, anticode_of(c.n(), j));
  });

  m.def("weight_distribution",
        [](const Code& c, std::optional<std::uint64_t> budget) {
          return weight_distribution(c.space(), budget_or_default(budget)).counts;
        },
        py::arg("code"), py::arg("budget") = py::none());
  m.def("binomial_moments",
        [](const Code& c, std::optional<std::uint64_t> budget) {
          return binomial_moments(c.space(), budget_or_default(budget)).counts;
        },
        py::arg("code"), py::arg("budget") = py::none());
  m.def("enumerators",
        [](const Code& c, std::optional<std::uint64_t> budget) {
          const EnumeratorPair p = enumerator_polys(c, budget_or_default(budget));
          py::dict d;
          d["a"] = p.a.to_string();
          d["b"] = p.b.to_string();
          d["a_coeffs"] = p.a.coeffs();
          d["b_coeffs"] = p.b.coeffs();
          return d;
        },
        py::arg("code"), py::arg("budget") = py::none());

  m.def("puncture", [](const Code& c, const std::vector<std::size_t>& j) {
    return Code(puncture(c.space(), anticode_of(c.n(), j)));
  });
  m.def("shorten", [](const Code& c, const std::vector<std::size_t>& j) {
    return Code(shorten(c.space(), anticode_of(c.n(), j)));
  });

  m.def("verify_json",
        [](const std::string& suite, std::uint64_t seed, std::size_t random_codes) {
          VerifyOptions o;
          o.suite = suite;
          o.seed = seed;
          o.random_codes = random_codes;
          return verify(fixture_codes(), o).json.dump();
        },
        py::arg("suite") = "all", py::arg("seed") = 7, py::arg("random_codes") = 8);
}
