#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "branecalc/brane.hpp"
#include "branecalc/parser.hpp"

namespace py = pybind11;
using namespace branecalc;

namespace {

struct PyModel {
  ParsedModel parsed;
};

struct PyEngine {
  BraneEngine eng;
  BraneOperation delta, mu;

  Element parse_in(const SullivanModel& m, const std::string& expr) const {
    return parse_element(expr, m.algebra);
  }
};

PyEngine make_engine(const PyModel& m, int k, int n_max, bool solver) {
  PyEngine out{build_brane_engine(m.parsed.model, k, n_max,
                                  solver ? SectionMode::Solver : SectionMode::Auto),
               {},
               {}};
  out.delta = brane_coproduct_dual(out.eng);
  out.mu = brane_product_dual(out.eng);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "exact Sullivan-model engine for sphere-brane operations";
  mod.attr("__version__") = kEngineVersion;

  py::register_exception<input_error>(mod, "InputError", PyExc_ValueError);
  py::register_exception<verify_error>(mod, "VerifyError", PyExc_RuntimeError);

  py::class_<PyModel>(mod, "Model")
      .def_property_readonly("name",
                             [](const PyModel& m) { return m.parsed.name; })
      .def("generators",
           [](const PyModel& m) {
             std::vector<std::pair<std::string, int>> out;
             for (const Generator& g : m.parsed.model.algebra->gens())
               out.emplace_back(g.name, g.degree);
             return out;
           })
      .def("differential",
           [](const PyModel& m, const std::string& gen) {
             return m.parsed.model.d
                 .image(m.parsed.model.algebra->index_of(gen))
                 .str();
           })
      .def("d",
           [](const PyModel& m, const std::string& expr) {
             return m.parsed.model.d
                 .apply(parse_element(expr, m.parsed.model.algebra))
                 .str();
           })
      .def("is_pure",
           [](const PyModel& m) { return check_pure(m.parsed.model).pure; })
      .def("cohomology",
           [](const PyModel& m, int n_max) {
             return cohomology_dims(m.parsed.model, n_max);
           })
      .def("default_truncation",
           [](const PyModel& m) { return default_truncation(m.parsed.model); });

  py::class_<PyEngine>(mod, "BraneEngine")
      .def(py::init(&make_engine), py::arg("model"), py::arg("k") = 2,
           py::arg("max_degree") = -1, py::arg("solver") = false)
      .def_property_readonly(
          "degree_shifts",
          [](const PyEngine& e) {
            return std::pair(e.delta.degree_shift, e.mu.degree_shift);
          })
      .def("coproduct",
           [](const PyEngine& e, const std::string& expr) {
             return e.delta.apply(e.parse_in(e.delta.source, expr)).str();
           })
      .def("product",
           [](const PyEngine& e, const std::string& expr) {
             return e.mu.apply(e.parse_in(e.mu.source, expr)).str();
           })
      .def("composite",
           [](const PyEngine& e, const std::string& expr) {
             return e.delta.apply(e.mu.apply(e.parse_in(e.mu.source, expr))).str();
           })
      .def("composite_report", [](const PyEngine& e, int n_max) {
        CompositeResult comp = compose_operations(e.delta, e.mu, n_max);
        std::vector<std::pair<std::string, std::string>> wits;
        for (const auto& [mono, img] : comp.report.witnesses)
          wits.emplace_back(comp.op.source.algebra->mono_str(mono), img.str());
        return std::pair(comp.report.nontrivial, std::move(wits));
      });

  mod.def("parse_model",
          [](const std::string& text) { return PyModel{parse_model(text)}; });
  mod.def(
      "verify",
      [](const PyModel& m, int k, int n_max) {
        VerifyReport rep = run_verify_suite(m.parsed.model, k, n_max);
        std::vector<std::tuple<std::string, bool, std::string>> out;
        for (const auto& c : rep.checks) out.emplace_back(c.name, c.ok, c.detail);
        return out;
      },
      py::arg("model"), py::arg("k") = 2, py::arg("max_degree") = -1);
}
