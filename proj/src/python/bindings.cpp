#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "cliffq/cli/driver.hpp"
#include "cliffq/cli/eval.hpp"
#include "cliffq/format.hpp"
#include "cliffq/metric_file.hpp"
#include "cliffq/structure.hpp"

namespace py = pybind11;
using namespace cliffq;

namespace {

Engine engine_from(const std::string& name) {
  if (name == "auto") return Engine::Auto;
  if (name == "oracle") return Engine::Oracle;
  if (name == "fast") return Engine::Fast;
  throw py::value_error("engine must be 'auto', 'oracle' or 'fast'");
}

// Accepts int, str ("3/2") or anything whose str() is a rational, such as
// fractions.Fraction.
Rational to_rational(const py::handle& h) { return Rational::parse(py::str(h).cast<std::string>()); }

struct PyAlgebra;

struct PyMultivector {
  std::shared_ptr<const cli::Context> ctx;
  MV value;

  PyMultivector with(MV v) const { return {ctx, std::move(v)}; }
};

struct PyAlgebra {
  std::shared_ptr<const cli::Context> ctx;

  PyMultivector wrap(MV v) const { return {ctx, std::move(v)}; }

  void check(const PyMultivector& m) const {
    if (m.ctx != ctx) throw py::value_error("multivector belongs to a different algebra");
  }
};

}  // namespace

PYBIND11_MODULE(_cliffq, m) {
  m.doc() = "Exact Clifford algebra engine (C++ core)";

  // Translators run newest first, so the base class goes in first.
  py::register_exception<Error>(m, "CliffordError", PyExc_ValueError);
  py::register_exception<NotInvertible>(m, "NotInvertible", PyExc_ArithmeticError);
  py::register_exception<cli::ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<PyMultivector>(m, "Multivector")
      .def("terms",
           [](const PyMultivector& a) {
             std::vector<std::pair<std::string, std::string>> out;
             for (const auto& [b, c] : a.value.terms()) {
               out.emplace_back(blade_label(b, a.ctx->labels), c.str());
             }
             return out;
           },
           "(blade label, coefficient string) pairs in canonical order")
      .def("grade", [](const PyMultivector& a, unsigned k) { return a.with(a.value.grade(k)); })
      .def("max_grade", [](const PyMultivector& a) { return a.value.max_grade(); })
      .def("to_json", [](const PyMultivector& a) { return format_json(a.value, a.ctx->labels); })
      .def("__str__", [](const PyMultivector& a) { return format_human(a.value, a.ctx->labels); })
      .def("__repr__",
           [](const PyMultivector& a) {
             return "Multivector(" + format_human(a.value, a.ctx->labels) + ")";
           })
      .def("__add__", [](const PyMultivector& a, const PyMultivector& b) { return a.with(a.value + b.value); })
      .def("__sub__", [](const PyMultivector& a, const PyMultivector& b) { return a.with(a.value - b.value); })
      .def("__neg__", [](const PyMultivector& a) { return a.with(-a.value); })
      .def("__mul__",
           [](const PyMultivector& a, const PyMultivector& b) {
             return a.with(a.ctx->algebra.product(a.value, b.value));
           })
      .def("__xor__",
           [](const PyMultivector& a, const PyMultivector& b) {
             return a.with(wedge_product(a.value, b.value));
           })
      .def("__or__",
           [](const PyMultivector& a, const PyMultivector& b) {
             return a.with(a.ctx->algebra.left_contraction(a.value, b.value));
           })
      .def("__eq__", [](const PyMultivector& a, const PyMultivector& b) { return a.value == b.value; });

  py::class_<PyAlgebra>(m, "Algebra")
      .def_static(
          "from_signature",
          [](std::size_t p, std::size_t q, std::size_t r, const std::string& engine) {
            return PyAlgebra{std::make_shared<const cli::Context>(
                cli::context_from_signature({p, q, r}, engine_from(engine)))};
          },
          py::arg("p"), py::arg("q") = 0, py::arg("r") = 0, py::arg("engine") = "auto")
      .def_static(
          "from_preset",
          [](const std::string& name, const std::string& engine) {
            return PyAlgebra{std::make_shared<const cli::Context>(
                cli::context_from_preset(name, engine_from(engine)))};
          },
          py::arg("name"), py::arg("engine") = "auto")
      .def_static(
          "from_metric_json",
          [](const std::string& text, const std::string& engine) {
            return PyAlgebra{std::make_shared<const cli::Context>(
                cli::context_from_metric(parse_metric(text), "<json>", engine_from(engine)))};
          },
          py::arg("text"), py::arg("engine") = "auto")
      .def_property_readonly("dim", [](const PyAlgebra& a) { return a.ctx->algebra.dim(); })
      .def_property_readonly("labels", [](const PyAlgebra& a) { return a.ctx->labels; })
      .def_property_readonly("name", [](const PyAlgebra& a) { return a.ctx->name; })
      .def("evaluate",
           [](const PyAlgebra& a, const std::string& src) { return a.wrap(cli::evaluate(src, *a.ctx)); })
      .def("scalar", [](const PyAlgebra& a, const py::handle& c) { return a.wrap(a.ctx->algebra.scalar(to_rational(c))); })
      .def("vector",
           [](const PyAlgebra& a, const std::vector<py::object>& coords) {
             Vec v(coords.size());
             for (std::size_t i = 0; i < coords.size(); ++i) v[i] = to_rational(coords[i]);
             if (v.dim() != a.ctx->algebra.dim()) throw DimensionMismatch(a.ctx->algebra.dim(), v.dim());
             return a.wrap(MV::vector(v));
           })
      .def("quadratic",
           [](const PyAlgebra& a, const std::vector<py::object>& coords) {
             Vec v(coords.size());
             for (std::size_t i = 0; i < coords.size(); ++i) v[i] = to_rational(coords[i]);
             return a.ctx->algebra.form()(v).str();
           })
      .def("product",
           [](const PyAlgebra& a, const PyMultivector& x, const PyMultivector& y) {
             a.check(x);
             a.check(y);
             return a.wrap(a.ctx->algebra.product(x.value, y.value));
           })
      .def("wedge",
           [](const PyAlgebra& a, const PyMultivector& x, const PyMultivector& y) {
             a.check(x);
             a.check(y);
             return a.wrap(wedge_product(x.value, y.value));
           })
      .def("left_contraction",
           [](const PyAlgebra& a, const PyMultivector& x, const PyMultivector& y) {
             a.check(x);
             a.check(y);
             return a.wrap(a.ctx->algebra.left_contraction(x.value, y.value));
           })
      .def("involute", [](const PyAlgebra& a, const PyMultivector& x) { a.check(x); return a.wrap(involute(x.value)); })
      .def("reverse", [](const PyAlgebra& a, const PyMultivector& x) { a.check(x); return a.wrap(reverse(x.value)); })
      .def("conjugate", [](const PyAlgebra& a, const PyMultivector& x) { a.check(x); return a.wrap(clifford_conjugate(x.value)); })
      .def("even_odd",
           [](const PyAlgebra& a, const PyMultivector& x) {
             a.check(x);
             auto parts = grades_z2(x.value);
             return py::make_tuple(a.wrap(parts.even), a.wrap(parts.odd));
           })
      .def("cayley_table", [](const PyAlgebra& a) {
        const auto t = cli::cayley_table(*a.ctx);
        std::vector<std::vector<std::string>> rows;
        for (const auto& row : t.products) {
          std::vector<std::string> cells;
          for (const auto& mv : row) cells.push_back(format_human(mv, a.ctx->labels));
          rows.push_back(std::move(cells));
        }
        return py::make_tuple(t.basis, rows);
      });

  m.def("preset_names", &preset_names);
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      "Run the command-line front end in-process; returns (exit code, stdout, stderr).");
}
