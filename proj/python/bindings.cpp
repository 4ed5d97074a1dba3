#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ceerlab/ceer.hpp"
#include "ceerlab/golod_shafarevich.hpp"
#include "ceerlab/ideal.hpp"
#include "ceerlab/lab/scenario.hpp"
#include "ceerlab/lab/verify.hpp"

namespace py = pybind11;
using namespace ceerlab;

PYBIND11_MODULE(_core, m) {
  m.doc() = "ceerlab core bindings";

  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<MonotonicityError>(m, "MonotonicityError", PyExc_ValueError);
  py::register_exception<RangeError>(m, "RangeError", PyExc_IndexError);

  m.def("cantor_pair", &cantor_pair);
  m.def("cantor_unpair", &cantor_unpair);

  py::class_<CeerTable>(m, "CeerTable")
      .def(py::init<Natural>(), py::arg("bound") = kDefaultBound)
      .def_property_readonly("bound", &CeerTable::bound)
      .def("add", [](CeerTable& t, Natural a, Natural b, Stage s) -> CeerTable& { return t.add(a, b, s); },
           py::return_value_policy::reference_internal)
      .def("related", &CeerTable::related, py::arg("a"), py::arg("b"), py::arg("stage") = kFinalStage)
      .def("representative", &CeerTable::representative, py::arg("x"), py::arg("stage") = kFinalStage)
      .def("classes",
           [](const CeerTable& t, Stage s) { return t.snapshot(s).classes(); },
           py::arg("stage") = kFinalStage)
      .def("pairs", [](const CeerTable& t) {
        std::vector<std::tuple<Natural, Natural, Stage>> out;
        for (const auto& p : t.pairs()) out.emplace_back(p.a, p.b, p.stage);
        return out;
      });

  m.def("product", &product, py::arg("a"), py::arg("b"), py::arg("bound") = kDefaultBound);
  m.def(
      "uniform_join",
      [](const std::vector<CeerTable>& cols, Natural bound) { return uniform_join(cols, bound); },
      py::arg("columns"), py::arg("bound") = kDefaultBound);

  py::class_<Poly>(m, "Poly")
      .def_static("parse", &Poly::parse, py::arg("text"), py::arg("p") = 2)
      .def_property_readonly("degree", &Poly::degree)
      .def("__add__", [](const Poly& a, const Poly& b) { return a + b; })
      .def("__sub__", [](const Poly& a, const Poly& b) { return a - b; })
      .def("__mul__", [](const Poly& a, const Poly& b) { return a * b; })
      .def("__eq__", [](const Poly& a, const Poly& b) { return a == b; })
      .def("__str__", &Poly::to_string)
      .def("__repr__", [](const Poly& p) { return "Poly('" + p.to_string() + "')"; });

  py::class_<HomogeneousIdeal>(m, "HomogeneousIdeal")
      .def(py::init<std::uint32_t, std::size_t>(), py::arg("p") = 2,
           py::arg("maxdeg") = HomogeneousIdeal::kDefaultMaxDegree)
      .def("add_generator", &HomogeneousIdeal::add_generator)
      .def("member", &HomogeneousIdeal::member)
      .def("quotient_dim", &HomogeneousIdeal::quotient_dim);

  m.def(
      "gs_audit",
      [](const std::string& epsilon, const std::map<std::size_t, Natural>& counts, std::size_t K) {
        GSBudget b;
        b.epsilon = parse_rational(epsilon);
        for (const auto& [k, n] : counts) b.counts[k] = n;
        auto r = gs_audit(b, K);
        return py::make_tuple(r.passed(), r.describe());
      },
      py::arg("epsilon"), py::arg("counts"), py::arg("max_degree"));

  py::class_<RunOutcome>(m, "RunOutcome")
      .def_readonly("summary", &RunOutcome::summary)
      .def_property_readonly("log", [](const RunOutcome& o) { return o.log.str(); })
      .def_property_readonly("records", [](const RunOutcome& o) { return o.log.records.size(); });

  py::class_<Scenario>(m, "Scenario")
      .def_property_readonly("construction", &Scenario::construction)
      .def("set_param", &Scenario::set_param);

  m.def(
      "parse_scenario",
      [](const std::string& text, const std::string& name) {
        std::istringstream in(text);
        return parse_scenario(in, name);
      },
      py::arg("text"), py::arg("name") = "scenario");
  m.def("run_scenario", &run_scenario);
  m.def(
      "verify_log",
      [](const std::string& log_text, const std::string& suite) {
        std::istringstream in(log_text);
        auto r = verify_log(RunLog::read(in), suite);
        return py::make_tuple(r.passed, r.describe());
      },
      py::arg("log"), py::arg("suite"));
}
