#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "indsets/bijection.hpp"
#include "indsets/checks.hpp"
#include "indsets/closed_forms.hpp"
#include "indsets/errors.hpp"
#include "indsets/genfunc.hpp"
#include "indsets/graph.hpp"
#include "indsets/oracle.hpp"
#include "indsets/transfer.hpp"

namespace py = pybind11;
using namespace indsets;

namespace {

py::int_ to_py(const BigInt& v) {
  const std::string s = v.str();
  return py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 10));
}

BigInt from_py(const py::int_& v) { return BigInt(std::string(py::str(v))); }

py::list to_py(const std::vector<BigInt>& vs) {
  py::list out;
  for (const auto& v : vs) out.append(to_py(v));
  return out;
}

py::list to_py(const IntPolynomial& p) { return to_py(p.coeffs()); }

IntPolynomial poly_from_py(const std::vector<py::int_>& coeffs) {
  std::vector<BigInt> c;
  for (const auto& x : coeffs) c.push_back(from_py(x));
  return IntPolynomial(std::move(c));
}

Family family_arg(const std::string& name) {
  auto f = parse_family(name);
  if (!f) throw InvalidArgument("unknown family '" + name + "'");
  return *f;
}

EdgeInterpretation interp_arg(const std::string& name) {
  auto e = parse_interpretation(name);
  if (!e) throw InvalidArgument("unknown interpretation '" + name + "'");
  return *e;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact independent-set counts for iterated line-graph families";

  py::class_<RationalGF>(m, "RationalGF")
      .def(py::init([](const std::vector<py::int_>& num,
                       const std::vector<py::int_>& den) {
             return RationalGF(poly_from_py(num), poly_from_py(den));
           }),
           py::arg("num"), py::arg("den"))
      .def_property_readonly("num", [](const RationalGF& g) { return to_py(g.num()); })
      .def_property_readonly("den", [](const RationalGF& g) { return to_py(g.den()); })
      .def("series", [](const RationalGF& g, int n_max) { return to_py(series_of(g, n_max)); },
           py::arg("n_max"))
      .def("__str__", &RationalGF::to_string)
      .def("__repr__", [](const RationalGF& g) { return "RationalGF" + g.to_string(); })
      .def("__eq__", [](const RationalGF& a, const RationalGF& b) { return a == b; });

  m.def("parse_gf", [](const std::string& s) { return parse_gf(s); });

  m.def("level_vectors", [](const std::string& family, int ell) {
    std::vector<std::vector<int>> out;
    for (const auto& v : level_vectors(family_arg(family), ell)) out.push_back(v.bits());
    return out;
  }, py::arg("family"), py::arg("ell"));
  m.def("acceptance", [](const std::string& family, int ell) {
    return acceptance(family_arg(family), ell);
  }, py::arg("family"), py::arg("ell"));
  m.def("transfer_matrix", [](const std::string& family, int ell) {
    return build_transfer(family_arg(family), ell).dense();
  }, py::arg("family"), py::arg("ell"));

  m.def("count", [](const std::string& family, int ell, int n) {
    return to_py(count({family_arg(family), ell, n}));
  }, py::arg("family"), py::arg("ell"), py::arg("n"));
  m.def("count_series", [](const std::string& family, int ell, int n_max) {
    return to_py(count_series(family_arg(family), ell, n_max));
  }, py::arg("family"), py::arg("ell"), py::arg("n_max"));

  m.def("gf_from_transfer", [](const std::string& family, int ell) {
    return gf_from_transfer(family_arg(family), ell);
  }, py::arg("family"), py::arg("ell"));
  m.def("paper_gf", [](const std::string& family, int ell) {
    return paper_gf(family_arg(family), ell);
  }, py::arg("family"), py::arg("ell"));
  m.def("p_gf", &p_gf, py::arg("ell"));
  m.def("verify_p_first_column", &verify_p_first_column, py::arg("ell"));
  m.def("min_recurrence", [](const std::vector<py::int_>& seq) {
    std::vector<BigInt> s;
    for (const auto& x : seq) s.push_back(from_py(x));
    return to_py(min_recurrence(s));
  }, py::arg("seq"));

  m.def("g3_closed_form", [](int n) { return to_py(g3_closed_form(n)); }, py::arg("n"));
  m.def("g3_via_eq1", [](int n) { return to_py(g3_via_eq1(n)); }, py::arg("n"));
  m.def("g3_via_eq2", [](int n) { return to_py(g3_via_eq2(n)); }, py::arg("n"));
  m.def("g3_via_aux", [](int n) { return to_py(g3_via_aux(n)); }, py::arg("n"));
  m.def("pell", [](int n) { return to_py(pell(n)); }, py::arg("n"));
  m.def("lucas", [](int n) { return to_py(lucas(n)); }, py::arg("n"));

  py::class_<ExplicitGraph>(m, "ExplicitGraph")
      .def_readonly("ell", &ExplicitGraph::ell)
      .def_readonly("levels", &ExplicitGraph::levels)
      .def_readonly("vertex_count", &ExplicitGraph::vertex_count)
      .def_readonly("edges", &ExplicitGraph::edges)
      .def("degree_profile", [](const ExplicitGraph& g) { return degree_profile(g); })
      .def("to_dot", [](const ExplicitGraph& g) {
        std::ostringstream out;
        write_dot(out, g);
        return out.str();
      });
  m.def("build_graph", [](const std::string& family, int ell, int n,
                          const std::string& interpretation) {
    return build_graph({family_arg(family), ell, n}, interp_arg(interpretation));
  }, py::arg("family"), py::arg("ell"), py::arg("n"),
     py::arg("interpretation") = "literal");
  m.def("count_independent_sets", [](const ExplicitGraph& g) {
    return to_py(count_independent_sets(g));
  });
  m.def("compare", [](const std::string& family, int ell, int n,
                      const std::string& interpretation) {
    const auto r = compare({family_arg(family), ell, n}, interp_arg(interpretation));
    py::dict d;
    d["family"] = std::string(family_name(r.spec.family));
    d["ell"] = r.spec.ell;
    d["n"] = r.spec.n;
    d["interpretation"] = std::string(interpretation_name(r.interpretation));
    d["oracle_count"] = to_py(r.oracle_count);
    d["transfer_count"] = to_py(r.transfer_count);
    d["agree"] = r.agree;
    return d;
  }, py::arg("family"), py::arg("ell"), py::arg("n"),
     py::arg("interpretation") = "literal");

  m.def("valid_sequences", &valid_sequences, py::arg("n"));
  m.def("bijection_pairs", [](int n) {
    std::vector<std::pair<std::string, OddEvenSeq>> out;
    for (const auto& sel : independent_selections(n))
      out.emplace_back(sel.to_set_string(), to_sequence(sel));
    return out;
  }, py::arg("n"));
  m.def("from_sequence", [](const OddEvenSeq& s, int n) {
    const auto sel = from_sequence(s, n);
    return std::make_pair(sel.to_tuple_string(), sel.to_set_string());
  }, py::arg("seq"), py::arg("n"));

  m.def("verify_paper", []() {
    std::vector<std::tuple<std::string, bool, std::string>> out;
    for (const auto& r : run_reference_checks()) out.emplace_back(r.name, r.passed, r.detail);
    return out;
  });

  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<NoCertifiedRecurrence>(m, "NoCertifiedRecurrence",
                                                PyExc_ValueError);
  py::register_exception<MalformedSequence>(m, "MalformedSequence", PyExc_ValueError);
}
