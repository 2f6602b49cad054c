#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "secantq/cli.hpp"
#include "secantq/experiments.hpp"
#include "secantq/identity_suite.hpp"
#include "secantq/report.hpp"

namespace py = pybind11;
using namespace secantq;

namespace {

std::pair<double, double> as_pair(Vector2 v) { return {v.x(), v.y()}; }

SamplePoint sample(std::pair<double, double> p, double f) { return SamplePoint(Vector2(p.first, p.second), f); }

py::dict record_dict(const SweepRecord& r) {
  py::dict d;
  d["delta"] = r.delta;
  d["eta"] = r.eta;
  d["degenerate"] = r.degenerate;
  d["q"] = as_pair(r.q);
  d["q_norm"] = r.q_norm;
  d["normal"] = py::make_tuple(r.normal.nx, r.normal.ny, r.normal.nz);
  d["tangent_gap"] = r.tangent_gap;
  d["discrepancy"] = r.discrepancy;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Secant planes and difference vector quotients in the plane";

  py::register_exception<SyntaxError>(m, "SyntaxError", PyExc_ValueError);
  py::register_exception<EvalError>(m, "EvalError", PyExc_ArithmeticError);
  py::register_exception<CollinearPoints>(m, "CollinearPoints", PyExc_ValueError);
  py::register_exception<NonFiniteValue>(m, "NonFiniteValue", PyExc_ValueError);

  py::class_<Vector2>(m, "Vector2")
      .def(py::init<double, double>(), py::arg("x"), py::arg("y"))
      .def_property_readonly("x", &Vector2::x)
      .def_property_readonly("y", &Vector2::y)
      .def("norm", &Vector2::norm)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self == py::self)
      .def("__repr__", [](Vector2 v) { return "Vector2(" + format_double(v.x()) + ", " + format_double(v.y()) + ")"; });

  py::class_<Multivector>(m, "Multivector")
      .def(py::init<double, double, double, double>(), py::arg("s") = 0.0, py::arg("x") = 0.0, py::arg("y") = 0.0,
           py::arg("b") = 0.0)
      .def_property_readonly("s", &Multivector::s)
      .def_property_readonly("x", &Multivector::x)
      .def_property_readonly("y", &Multivector::y)
      .def_property_readonly("b", &Multivector::b)
      .def("__mul__", [](const Multivector& a, const Multivector& b) { return mv_mul(a, b); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self == py::self)
      .def("inverse", [](const Multivector& a) { return mv_inverse(a); })
      .def("__repr__", [](const Multivector& a) {
        return "Multivector(" + format_double(a.s()) + ", " + format_double(a.x()) + ", " + format_double(a.y()) + ", " +
               format_double(a.b()) + ")";
      });

  m.def("vec_dot", &vec_dot);
  m.def("vec_wedge", &vec_wedge);
  m.def("oriented_area", &oriented_area);

  m.def(
      "q_quotient",
      [](std::pair<double, double> a, double fa, std::pair<double, double> b, double fb, std::pair<double, double> c,
         double fc) { return as_pair(q_quotient(sample(a, fa), sample(b, fb), sample(c, fc))); },
      "q as the geometric quotient N (2 tau I2)^-1");
  m.def("all_quotients", [](std::pair<double, double> a, double fa, std::pair<double, double> b, double fb,
                            std::pair<double, double> c, double fc) {
    const QuotientTriple q = all_quotients(sample(a, fa), sample(b, fb), sample(c, fc));
    return py::make_tuple(as_pair(q.by_quotient), as_pair(q.by_normals), as_pair(q.by_determinant));
  });

  m.def("evaluate", [](const std::string& src, double x, double y) { return eval2(parse(src), x, y); });
  m.def("normalize", [](const std::string& src) { return to_string(parse(src)); },
        "Parse and print back with minimal parentheses");

  m.def(
      "sweep",
      [](const std::string& fn, double k, double delta_start, double delta_end, std::size_t steps,
         std::pair<double, double> x0) {
        SweepConfig cfg;
        cfg.f = parse(fn);
        cfg.k = k;
        cfg.delta_start = delta_start;
        cfg.delta_end = delta_end;
        cfg.steps = steps;
        cfg.x0 = Vector2(x0.first, x0.second);
        cfg.validate();
        py::list rows;
        for (const auto& r : run_sweep(cfg)) rows.append(record_dict(r));
        return rows;
      },
      py::arg("fn"), py::arg("k"), py::arg("delta_start") = 1e-1, py::arg("delta_end") = 1e-5, py::arg("steps") = 5,
      py::arg("x0") = std::pair<double, double>{0.0, 0.0});

  m.def(
      "ga_check",
      [](std::uint64_t seed, std::size_t trials) {
        const IdentityReport r = run_ga_check(seed, trials);
        py::dict d;
        for (const auto& i : r.results) d[py::str(i.name)] = py::make_tuple(i.max_error, i.tolerance, i.passed);
        return d;
      },
      py::arg("seed") = 0, py::arg("trials") = 1000);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      "Run the command line in-process; returns (exit_code, stdout, stderr)");
}
