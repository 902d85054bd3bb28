#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "feyncount/compositions.hpp"
#include "feyncount/counting.hpp"
#include "feyncount/verify.hpp"
#include "feyncount/wick_oracle.hpp"

namespace py = pybind11;

namespace {

using feyncount::Count;
using feyncount::Order;

py::int_ to_py(const Count& c) {
  PyObject* obj = PyLong_FromString(c.str().c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

py::list report_to_py(const feyncount::VerificationReport& report) {
  py::list rows;
  for (const auto& c : report.checks) {
    py::dict d;
    d["name"] = c.name;
    d["parameters"] = c.parameters;
    d["expected"] = c.expected;
    d["actual"] = c.actual;
    d["pass"] = c.pass;
    rows.append(d);
  }
  return rows;
}

py::dict census_to_py(const feyncount::oracle::OrbitCensus& census) {
  py::dict d;
  d["orbit_count"] = to_py(census.orbit_count);
  py::dict sizes;
  for (const auto& [size, freq] : census.orbit_sizes) sizes[py::int_(size)] = py::int_(freq);
  d["orbit_sizes"] = sizes;
  py::list reps;
  for (const auto& r : census.representatives) reps.append(r.matching.pairing());
  d["representatives"] = reps;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Feynman diagram counting and Wick-contraction oracle";

  py::register_exception<feyncount::BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<feyncount::ExactnessError>(m, "ExactnessError", PyExc_ArithmeticError);
  py::register_exception<feyncount::MethodDisagreement>(m, "MethodDisagreement",
                                                        PyExc_RuntimeError);
  py::register_exception<feyncount::oracle::OracleCapExceeded>(m, "OracleCapExceeded",
                                                               PyExc_ValueError);

  m.attr("DEFAULT_TERM_BUDGET") = feyncount::kDefaultTermBudget;

  // compositions
  m.def(
      "compositions",
      [](unsigned n) {
        std::vector<std::vector<unsigned>> out;
        for (const auto& c : feyncount::enumerate_compositions(n)) out.push_back(c.parts());
        return out;
      },
      py::arg("n"), "All compositions of n in cut-mask order.");
  m.def("count_compositions", [](unsigned n) { return to_py(feyncount::count_compositions(n)); },
        py::arg("n"));
  m.def(
      "multiset_multiplicity",
      [](const std::map<unsigned, unsigned>& ms) {
        return to_py(feyncount::multiset_multiplicity(ms));
      },
      py::arg("multiset"), "Orderings of a {part: multiplicity} multiset.");

  // counting
  m.def("factorial", [](unsigned n) { return to_py(feyncount::factorial(n)); }, py::arg("n"));
  m.def("double_factorial", [](unsigned k) { return to_py(feyncount::double_factorial(k)); },
        py::arg("k"));
  m.def("total_diagrams", [](Order o) { return to_py(feyncount::total_diagrams(o)); },
        py::arg("m"));
  m.def("bubble_diagrams", [](Order o) { return to_py(feyncount::bubble_diagrams(o)); },
        py::arg("m"));
  m.def("connected_recurrence", [](Order o) { return to_py(feyncount::connected_recurrence(o)); },
        py::arg("m"));
  m.def(
      "coefficient", [](unsigned n, Order o) { return to_py(feyncount::coefficient(n, o)); },
      py::arg("n"), py::arg("m"));
  m.def(
      "connected_closed_form",
      [](Order o, std::uint64_t budget) {
        return to_py(feyncount::connected_closed_form(o, budget));
      },
      py::arg("m"), py::arg("term_budget") = feyncount::kDefaultTermBudget);
  m.def(
      "arques_walsh",
      [](Order o, std::uint64_t budget) { return to_py(feyncount::arques_walsh(o, budget)); },
      py::arg("m"), py::arg("term_budget") = feyncount::kDefaultTermBudget);
  m.def("distinct_connected", [](Order o) { return to_py(feyncount::distinct_connected(o)); },
        py::arg("m"));
  m.def(
      "verify_coefficient_recursion",
      [](Order o) { return report_to_py(feyncount::verify_coefficient_recursion(o)); },
      py::arg("m_max"));
  m.def(
      "verify_rewrite_identities",
      [](Order o) { return report_to_py(feyncount::verify_rewrite_identities(o)); },
      py::arg("m_max"));
  m.def(
      "verify",
      [](Order max_order, std::uint64_t budget, bool oracle_override, bool run_oracle) {
        feyncount::SuiteOptions opts;
        opts.max_order = max_order;
        opts.term_budget = budget;
        opts.oracle_override = oracle_override;
        opts.run_oracle = run_oracle;
        feyncount::VerificationReport report;
        {
          py::gil_scoped_release release;
          report = feyncount::run_verification_suite(opts);
        }
        return report_to_py(report);
      },
      py::arg("max_order"), py::arg("term_budget") = feyncount::kDefaultTermBudget,
      py::arg("oracle_override") = false, py::arg("run_oracle") = true);
  m.def(
      "count_table",
      [](Order max_order, const std::string& method, std::uint64_t budget) {
        py::list rows;
        for (const auto& r :
             feyncount::count_table(max_order, feyncount::parse_method(method), budget)) {
          py::dict d;
          d["m"] = r.m;
          d["total"] = to_py(r.total);
          d["bubbles"] = to_py(r.bubbles);
          d["connected"] = to_py(r.connected);
          d["distinct"] = to_py(r.distinct);
          rows.append(d);
        }
        return rows;
      },
      py::arg("max_order"), py::arg("method") = "recurrence",
      py::arg("term_budget") = feyncount::kDefaultTermBudget);

  // oracle
  namespace fo = feyncount::oracle;
  m.def(
      "enumerate_matchings",
      [](Order o, bool allow_order_5) {
        fo::MatchingCensus c;
        {
          py::gil_scoped_release release;
          c = fo::enumerate_matchings(o, {allow_order_5, 1});
        }
        py::dict d;
        d["total"] = to_py(c.total);
        d["connected"] = to_py(c.connected);
        return d;
      },
      py::arg("m"), py::arg("allow_order_5") = false);
  m.def(
      "enumerate_vacuum_matchings",
      [](Order o, bool allow_order_5) {
        return to_py(fo::enumerate_vacuum_matchings(o, {allow_order_5, 1}));
      },
      py::arg("m"), py::arg("allow_order_5") = false);
  m.def(
      "orbit_census",
      [](Order o) {
        fo::OrbitCensus c;
        {
          py::gil_scoped_release release;
          c = fo::orbit_census(o);
        }
        return census_to_py(c);
      },
      py::arg("m"));
  m.def(
      "canonical_form",
      [](Order o, std::vector<std::uint8_t> pairing) {
        return fo::canonical_form(fo::WickMatching(o, std::move(pairing))).matching.pairing();
      },
      py::arg("m"), py::arg("pairing"));
  m.def(
      "export_diagram",
      [](Order o, std::vector<std::uint8_t> pairing) {
        return fo::export_diagram(fo::canonical_form(fo::WickMatching(o, std::move(pairing))));
      },
      py::arg("m"), py::arg("pairing"), "DOT text for the orbit of the given matching.");
}
