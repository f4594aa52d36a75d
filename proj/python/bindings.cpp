#include "eulersym/parse.hpp"
#include "eulersym/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace eulersym;

namespace {

// Rationals cross the boundary as "p/q" strings; the Python layer maps them
// to fractions.Fraction.
Vector to_vector(const std::vector<std::string>& v) {
  Vector out;
  for (const auto& s : v) out.push_back(parse_rational(s));
  return out;
}

std::string dump(const Report& r) {
  Json j;
  j["passed"] = r.passed;
  j["report"] = r.body;
  return j.dump();
}

ReportOptions options(std::uint64_t seed, bool certify, std::size_t points) {
  ReportOptions o;
  o.seed = seed;
  o.certify = certify;
  o.points = points;
  return o;
}

AmbientPoint load_point(const Source& s, const std::string& point_json) {
  return point_from_json(Json::parse(point_json), AmbientSpace(s.polynomial));
}

}  // namespace

PYBIND11_MODULE(_eulersym, m) {
  m.doc() = "Exact symbol systems, Legendre transforms and embeddings of homogeneous polynomials";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<CatalogError>(m, "CatalogError", PyExc_ValueError);
  py::register_exception<HomogeneityError>(m, "HomogeneityError", PyExc_ValueError);

  py::class_<Source>(m, "Source")
      .def_static("from_expression", &source_from_expression, py::arg("text"))
      .def_static("from_catalog", &source_from_catalog, py::arg("names"))
      .def_property_readonly("text", [](const Source& s) { return s.polynomial.to_string(s.names); })
      .def_property_readonly("names", [](const Source& s) { return s.names; })
      .def_property_readonly("num_vars", [](const Source& s) { return s.polynomial.num_vars(); })
      .def_property_readonly("degree", [](const Source& s) { return s.polynomial.degree(); })
      .def_property_readonly("label", [](const Source& s) { return s.label; })
      .def("evaluate",
           [](const Source& s, const std::vector<std::string>& point) {
             return to_string(s.polynomial.evaluate(to_vector(point)));
           })
      .def("profile", [](const Source& s) { return symbol_system_of(s.polynomial).profile(); })
      .def("terms", [](const Source& s) {
        std::vector<std::pair<std::vector<unsigned>, std::string>> out;
        for (const auto& [mono, c] : s.polynomial.terms()) out.emplace_back(mono.exponents(), to_string(c));
        return out;
      })
      .def("__str__", [](const Source& s) { return s.polynomial.to_string(s.names); });

  m.def(
      "analyze", [](const Source& s, std::uint64_t seed) { return dump(analyze_report(s, options(seed, false, 64))); },
      py::arg("source"), py::arg("seed") = 0);
  m.def(
      "legendre",
      [](const Source& s, std::uint64_t seed, bool certify, std::size_t points) {
        py::gil_scoped_release release;
        return dump(legendre_report(s, options(seed, certify, points)));
      },
      py::arg("source"), py::arg("seed") = 0, py::arg("certify") = false, py::arg("points") = 64);
  m.def(
      "smooth_check",
      [](const Source& s, std::uint64_t seed) { return dump(smoothness_json(s, options(seed, false, 64))); },
      py::arg("source"), py::arg("seed") = 0);
  m.def(
      "embed",
      [](const Source& s, const std::string& t, const std::vector<std::string>& w) {
        return dump(embed_report(s, parse_rational(t), to_vector(w)));
      },
      py::arg("source"), py::arg("t"), py::arg("w"));
  m.def(
      "act",
      [](const Source& s, const std::vector<std::string>& v, const std::string& point) {
        return dump(act_report(s, to_vector(v), load_point(s, point)));
      },
      py::arg("source"), py::arg("v"), py::arg("point"));
  m.def(
      "limit",
      [](const Source& s, const std::string& point, const std::string& dir) {
        if (dir != "zero" && dir != "infinity") throw py::value_error("dir must be 'zero' or 'infinity'");
        return dump(limit_report(s, load_point(s, point),
                                 dir == "zero" ? LimitDirection::to_zero : LimitDirection::to_infinity));
      },
      py::arg("source"), py::arg("point"), py::arg("dir"));
  m.def(
      "curve_limit",
      [](const Source& s, const std::string& point, const std::vector<std::string>& v) {
        return dump(curve_limit_report(s, load_point(s, point), to_vector(v)));
      },
      py::arg("source"), py::arg("point"), py::arg("v"));
  m.def(
      "relations", [](const Source& s, const std::string& point) { return dump(relations_report(s, load_point(s, point))); },
      py::arg("source"), py::arg("point"));
  m.def("catalog_list", [] { return dump(catalog_list_report()); });
  m.def(
      "catalog_build", [](const std::string& name) { return dump(catalog_build_report(name)); }, py::arg("name"));
  m.def(
      "catalog_verify",
      [](const std::string& name, std::uint64_t seed) {
        py::gil_scoped_release release;
        return dump(catalog_verify_report(name, options(seed, false, 64)));
      },
      py::arg("name"), py::arg("seed") = 0);
  m.def(
      "catalog_classify",
      [](const std::string& names, std::uint64_t seed) {
        return dump(catalog_classify_report(names, options(seed, false, 64)));
      },
      py::arg("names"), py::arg("seed") = 0);
}
