#include "linrel/cli.hpp"
#include "linrel/extend.hpp"
#include "linrel/io.hpp"
#include "linrel/stargraph.hpp"
#include "linrel/transform.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace linrel;

namespace {

py::dict spectrum_dict(const SpectrumReport& s) {
  auto shape = [](SpectrumShape k) { return k == SpectrumShape::kFinite ? "finite" : "whole_plane"; };
  py::list eig;
  for (const Eigenvalue& e : s.eigenvalues) eig.append(py::make_tuple(e.value, e.multiplicity));
  py::dict d;
  d["eigenvalues"] = eig;
  d["point_shape"] = shape(s.point_shape);
  if (s.full_computed) d["full_shape"] = shape(s.full_shape);
  d["note"] = s.note;
  return d;
}

py::dict report_dict(const ClassificationReport& c) {
  py::dict d;
  d["symmetric"] = c.symmetric;
  d["selfadjoint"] = c.selfadjoint;
  d["positive"] = c.positive;
  d["quasi_null"] = c.quasi_null;
  d["contraction"] = c.contraction;
  d["isometry"] = c.isometry;
  d["m"] = c.has_bounds ? py::object(py::float_(c.lower_bound)) : py::object(py::none());
  d["M"] = c.has_bounds ? py::object(py::float_(c.upper_bound)) : py::object(py::none());
  d["norm"] = c.norm;
  return d;
}

}  // namespace

PYBIND11_MODULE(_linrel, m) {
  m.doc() = "Finite-dimensional linear relations";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<ConsistencyError>(m, "ConsistencyError", base.ptr());
  py::register_exception<InputError>(m, "InputError", base.ptr());

  py::class_<Tolerances>(m, "Tolerances")
      .def(py::init<>())
      .def_readwrite("rank", &Tolerances::rank)
      .def_readwrite("eq", &Tolerances::eq)
      .def_readwrite("psd", &Tolerances::psd)
      .def_readwrite("orth", &Tolerances::orth)
      .def_readwrite("cluster", &Tolerances::cluster);
  const Tolerances def;

  py::class_<Subspace>(m, "Subspace")
      .def_static("span", py::overload_cast<const Matrix&, const Tolerances&>(&Subspace::span),
                  py::arg("generators"), py::arg("tol") = def)
      .def_property_readonly("ambient_dim", &Subspace::ambient_dim)
      .def_property_readonly("dim", &Subspace::dim)
      .def_property_readonly("basis", &Subspace::basis)
      .def("projector", &Subspace::projector)
      .def("distance", &Subspace::distance)
      .def("equals", &Subspace::equals, py::arg("other"), py::arg("tol") = def)
      .def("contains", py::overload_cast<const Subspace&, const Tolerances&>(&Subspace::contains, py::const_),
           py::arg("other"), py::arg("tol") = def);

  py::class_<LinearRelation>(m, "LinearRelation")
      .def_static("zero", &LinearRelation::zero)
      .def_static("identity", &LinearRelation::identity)
      .def_static("from_pairs", &LinearRelation::from_pairs, py::arg("first"), py::arg("second"),
                  py::arg("tol") = def)
      .def_static("graph", &LinearRelation::graph, py::arg("op"), py::arg("tol") = def)
      .def_static(
          "from_operator",
          [](const Matrix& op, const Matrix& domain, const Tolerances& tol) {
            return LinearRelation::from_operator(op, Subspace::span(domain, tol), tol);
          },
          py::arg("op"), py::arg("domain"), py::arg("tol") = def)
      .def_property_readonly("space_dim", &LinearRelation::space_dim)
      .def_property_readonly("dim", &LinearRelation::dim)
      .def_property_readonly("carrier", &LinearRelation::carrier)
      .def_property_readonly("first", &LinearRelation::first)
      .def_property_readonly("second", &LinearRelation::second)
      .def("contains", &LinearRelation::contains, py::arg("other"), py::arg("tol") = def)
      .def("equals", &LinearRelation::equals, py::arg("other"), py::arg("tol") = def)
      .def("distance", &LinearRelation::distance)
      .def("__repr__", [](const LinearRelation& t) {
        std::ostringstream s;
        s << "<LinearRelation n=" << t.space_dim() << " dim=" << t.dim() << ">";
        return s.str();
      });

  m.def("adjoint", &adjoint, py::arg("t"), py::arg("tol") = def);
  m.def("inverse", &inverse);
  m.def("add", &add, py::arg("t"), py::arg("s"), py::arg("tol") = def);
  m.def("scale", &scale, py::arg("zeta"), py::arg("t"), py::arg("tol") = def);
  m.def("compose", &compose, py::arg("s"), py::arg("t"), py::arg("tol") = def);
  m.def("domain", &domain, py::arg("t"), py::arg("tol") = def);
  m.def("range", &range, py::arg("t"), py::arg("tol") = def);
  m.def("kernel", &kernel, py::arg("t"), py::arg("tol") = def);
  m.def("multivalued_part", &multivalued_part, py::arg("t"), py::arg("tol") = def);

  m.def("krein", &krein, py::arg("t"), py::arg("tol") = def);
  m.def("krein_by_resolvent", &krein_by_resolvent, py::arg("t"), py::arg("tol") = def);

  m.def("is_symmetric", &is_symmetric, py::arg("t"), py::arg("tol") = def);
  m.def("is_selfadjoint", &is_selfadjoint, py::arg("t"), py::arg("tol") = def);
  m.def("is_positive", &is_positive, py::arg("t"), py::arg("tol") = def);
  m.def("is_quasi_null", &is_quasi_null, py::arg("t"), py::arg("tol") = def);
  m.def("is_contraction", &is_contraction, py::arg("t"), py::arg("tol") = def);
  m.def("is_isometry", &is_isometry, py::arg("t"), py::arg("tol") = def);
  m.def(
      "bounds",
      [](const LinearRelation& t, const Tolerances& tol) {
        const Bounds b = bounds(t, tol);
        if (!b.defined) return py::object(py::none());
        return py::object(py::make_tuple(b.lower, b.upper));
      },
      py::arg("t"), py::arg("tol") = def);
  m.def("relation_norm", &relation_norm, py::arg("t"), py::arg("tol") = def);
  m.def("resolvent_norm", &resolvent_norm, py::arg("t"), py::arg("zeta"), py::arg("tol") = def);
  m.def(
      "classify", [](const LinearRelation& t, const Tolerances& tol) { return report_dict(classify(t, tol)); },
      py::arg("t"), py::arg("tol") = def);
  m.def(
      "point_spectrum",
      [](const LinearRelation& t, const Tolerances& tol) { return spectrum_dict(point_spectrum(t, tol)); },
      py::arg("t"), py::arg("tol") = def);
  m.def(
      "full_spectrum",
      [](const LinearRelation& t, const Tolerances& tol) { return spectrum_dict(full_spectrum(t, tol)); },
      py::arg("t"), py::arg("tol") = def);

  m.def("deficiency_space", &deficiency_space, py::arg("a"), py::arg("zeta"), py::arg("tol") = def);
  m.def(
      "deficiency_index",
      [](const LinearRelation& a, const std::vector<Complex>& probes, const Tolerances& tol) {
        return deficiency_index(a, probes, tol);
      },
      py::arg("a"), py::arg("probes"), py::arg("tol") = def);
  m.def("extend_semibounded", &extend_semibounded, py::arg("a"), py::arg("alpha"),
        py::arg("tol") = def);

  py::class_<StarConfig>(m, "StarConfig")
      .def(py::init<std::vector<double>>(), py::arg("weights"))
      .def_static("unweighted", &StarConfig::unweighted)
      .def_property_readonly("leaves", &StarConfig::leaves)
      .def_property_readonly("weights", &StarConfig::weights)
      .def_property_readonly("space_dim", &StarConfig::space_dim);
  m.def("build_star", &build_star, py::arg("cfg"), py::arg("tol") = def);
  m.def("star_closure_relation", &star_closure_relation, py::arg("cfg"), py::arg("tol") = def);
  m.def("star_sa_family", &star_sa_family, py::arg("cfg"), py::arg("beta"), py::arg("tol") = def);
  m.def(
      "star_extension_alpha",
      [](const StarConfig& cfg, double alpha, const Tolerances& tol) {
        const StarExtension e = star_extension_alpha(cfg, alpha, tol);
        return py::make_tuple(e.relation, spectrum_dict(e.spectrum));
      },
      py::arg("cfg"), py::arg("alpha"), py::arg("tol") = def);

  m.def(
      "parse_relation",
      [](const std::string& text, const Tolerances& tol) {
        return to_relation(parse_document_text(text), tol);
      },
      py::arg("text"), py::arg("tol") = def, "Relation from a JSON relation document.");
  m.def(
      "relation_to_json", [](const LinearRelation& t) { return dump(document_to_json(span_document(t))); },
      "Canonical span document of a relation.");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command-line tool in-process; returns (exit_code, stdout, stderr).");
}
