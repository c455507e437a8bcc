#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qposet/arrows.hpp"
#include "qposet/document.hpp"
#include "qposet/enumerate.hpp"
#include "qposet/errors.hpp"
#include "qposet/fixtures.hpp"
#include "qposet/verifier.hpp"

namespace py = pybind11;
using namespace qposet;

namespace {

ArrowKind arrow_of(const std::string& text) {
  const auto k = parse_arrow(text);
  if (!k) throw Error(ErrorKind::InvalidArgument, "unknown arrow '" + text + "'");
  return *k;
}

Element element_of(const OrthoPoset& q, const std::string& name) {
  const auto e = q.poset().find(name);
  if (!e) throw Error(ErrorKind::InvalidArgument, "unknown element '" + name + "'");
  return *e;
}

std::vector<std::string> names(const OrthoPoset& q, ElementSet s) {
  std::vector<std::string> out;
  for (Element x : s) out.push_back(q.name_of(x));
  return out;
}

py::dict report_dict(const OrthoPoset& q, const Report& r) {
  py::dict d;
  d["name"] = r.name;
  d["holds"] = r.holds;
  std::vector<std::string> w;
  for (Element x : r.witness) w.push_back(q.name_of(x));
  d["witness"] = w;
  d["detail"] = r.detail;
  return d;
}

}  // namespace

PYBIND11_MODULE(_qposet, m) {
  m.doc() = "Finite bounded posets with antitone involution";

  static py::exception<Error> error(m, "QposetError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<OrthoPoset>(m, "OrthoPoset")
      .def_property_readonly("name", &OrthoPoset::name)
      .def_property_readonly("size", &OrthoPoset::size)
      .def_property_readonly("elements", [](const OrthoPoset& q) { return names(q, ElementSet::full(q.size())); })
      .def("leq", [](const OrthoPoset& q, const std::string& x,
                     const std::string& y) { return q.leq(element_of(q, x), element_of(q, y)); })
      .def("prime", [](const OrthoPoset& q, const std::string& x) { return q.name_of(q.prime(element_of(q, x))); })
      .def("classify",
           [](const OrthoPoset& q) {
             py::dict d;
             for (const auto& name : class_names()) d[py::str(name)] = q.classification().find(name)->holds;
             return d;
           })
      .def("__repr__", [](const OrthoPoset& q) {
        return "<OrthoPoset " + q.name() + " (" + std::to_string(q.size()) + " elements)>";
      });

  m.def("fixture", &fixture, py::arg("name"));
  m.def("fixture_names", &fixture_names);
  m.def("class_names", &class_names);
  m.def("parse", &parse, py::arg("text"));
  m.def("serialize", &serialize, py::arg("q"));
  m.def("export_dot", &export_dot, py::arg("q"));

  m.def(
      "imp",
      [](const OrthoPoset& q, const std::string& arrow, const std::string& x, const std::string& y) {
        return names(q, imp(q, arrow_of(arrow), element_of(q, x), element_of(q, y)).values);
      },
      py::arg("q"), py::arg("arrow"), py::arg("x"), py::arg("y"), "Value set of x -> y as element names.");
  m.def(
      "arrow_table",
      [](const OrthoPoset& q, const std::string& arrow) {
        const ArrowTable t(q, arrow_of(arrow));
        py::dict d;
        for (Element x = 0; x < q.size(); ++x)
          for (Element y = 0; y < q.size(); ++y)
            d[py::make_tuple(q.name_of(x), q.name_of(y))] = names(q, t(x, y));
        return d;
      },
      py::arg("q"), py::arg("arrow"));

  m.def(
      "check_op", [](const OrthoPoset& q, const std::string& a) { return report_dict(q, check_op(q, arrow_of(a))); },
      py::arg("q"), py::arg("arrow"));
  m.def(
      "check_forward_op",
      [](const OrthoPoset& q, const std::string& a) { return report_dict(q, check_forward_op(q, arrow_of(a))); },
      py::arg("q"), py::arg("arrow"));
  m.def(
      "check_backward_op",
      [](const OrthoPoset& q, const std::string& a) { return report_dict(q, check_backward_op(q, arrow_of(a))); },
      py::arg("q"), py::arg("arrow"));
  m.def(
      "check_mpo", [](const OrthoPoset& q, const std::string& a) { return report_dict(q, check_mpo(q, arrow_of(a))); },
      py::arg("q"), py::arg("arrow"));
  m.def(
      "adjoint_exists",
      [](const OrthoPoset& q, const std::string& a) {
        const AdjointResult r = adjoint_exists(q, arrow_of(a));
        py::dict d = report_dict(q, r.check);
        d["gap"] = names(q, r.gap);
        if (r.op) {
          py::dict op;
          for (Element x = 0; x < q.size(); ++x)
            for (Element y = 0; y < q.size(); ++y) op[py::make_tuple(q.name_of(x), q.name_of(y))] = names(q, (*r.op)(x, y));
          d["operator"] = op;
        } else {
          d["operator"] = py::none();
        }
        return d;
      },
      py::arg("q"), py::arg("arrow"));
  m.def(
      "theorem_suite",
      [](const OrthoPoset& q) {
        py::list out;
        for (const auto& e : theorem_suite(q)) {
          py::dict d;
          d["id"] = e.id;
          d["name"] = e.name;
          d["verdict"] = to_string(e.verdict);
          d["detail"] = e.detail;
          out.append(d);
        }
        return out;
      },
      py::arg("q"));

  m.def(
      "enumerate",
      [](std::size_t n_max, const std::string& cls, unsigned jobs) {
        py::gil_scoped_release release;
        return enumerate_structures(n_max, cls.empty() ? StructureFilter{} : class_filter(cls), jobs);
      },
      py::arg("max_size"), py::arg("cls") = "", py::arg("jobs") = 1);
  m.def(
      "sweep_json",
      [](std::size_t n_max, unsigned jobs) {
        py::gil_scoped_release release;
        return to_json(sweep(n_max, jobs));
      },
      py::arg("max_size"), py::arg("jobs") = 1);
}
