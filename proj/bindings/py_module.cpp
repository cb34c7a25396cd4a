#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <string>
#include <vector>

#include "cliffcalc/detinv.hpp"
#include "cliffcalc/errors.hpp"
#include "cliffcalc/involutions.hpp"
#include "cliffcalc/json_io.hpp"
#include "cliffcalc/parse.hpp"
#include "cliffcalc/repr.hpp"

namespace py = pybind11;
using namespace cliffcalc;

namespace {

using Rows = std::vector<std::vector<Complex>>;

Rows matrix_rows(const ComplexMatrix& m) {
  Rows rows(m.dim(), std::vector<Complex>(m.dim()));
  for (int r = 0; r < m.dim(); ++r) {
    for (int c = 0; c < m.dim(); ++c) rows[r][c] = m.at(r, c);
  }
  return rows;
}

CoeffProfile profile_from(const std::string& name) {
  if (name == "full") return CoeffProfile::Full;
  if (name == "even") return CoeffProfile::Even;
  if (name == "odd") return CoeffProfile::Odd;
  throw std::invalid_argument("profile must be 'full', 'even' or 'odd'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "complex Clifford algebra kernel: products, conjugations, matrix "
            "representations, closed-form trace/determinant/inverse";

  py::register_exception<ParseError>(m, "ExpressionError");
  py::register_exception<NotInvertibleError>(m, "NotInvertible");
  py::register_exception<UnsupportedDimensionError>(m, "UnsupportedDimension");

  py::class_<Multivector>(m, "Multivector")
      .def_static(
          "zero", [](int p, int q) { return Multivector(Signature(p, q)); }, py::arg("p"),
          py::arg("q"))
      .def_static(
          "scalar",
          [](int p, int q, Complex value) { return Multivector::scalar(Signature(p, q), value); },
          py::arg("p"), py::arg("q"), py::arg("value"))
      .def_static(
          "basis_blade",
          [](int p, int q, BladeMask mask, Complex coeff) {
            return Multivector::basis_blade(Signature(p, q), mask, coeff);
          },
          py::arg("p"), py::arg("q"), py::arg("mask"), py::arg("coeff") = Complex{1.0, 0.0})
      .def_property_readonly("p", [](const Multivector& u) { return u.sig.p; })
      .def_property_readonly("q", [](const Multivector& u) { return u.sig.q; })
      .def_property_readonly("n", [](const Multivector& u) { return u.sig.n(); })
      .def_property_readonly("coeffs", [](const Multivector& u) { return u.coeffs; })
      .def("coeff", [](const Multivector& u, BladeMask mask) { return u.coeffs.at(mask); },
           py::arg("mask"))
      .def("__add__", [](const Multivector& u, const Multivector& v) { return u + v; })
      .def("__sub__", [](const Multivector& u, const Multivector& v) { return u - v; })
      .def("__mul__", [](const Multivector& u, const Multivector& v) { return u * v; })
      .def("__mul__", [](const Multivector& u, Complex alpha) { return scale(alpha, u); })
      .def("__rmul__", [](const Multivector& u, Complex alpha) { return scale(alpha, u); })
      .def("__neg__", [](const Multivector& u) { return -u; })
      .def("__repr__", [](const Multivector& u) {
        return "<Multivector Cl" + u.sig.str() + " " + to_canonical_text(u) + ">";
      })
      .def("text", [](const Multivector& u) { return to_canonical_text(u); })
      .def("to_json", [](const Multivector& u) { return multivector_to_json(u).dump(); })
      .def_static("from_json", [](const std::string& text) {
        return multivector_from_json(nlohmann::json::parse(text));
      });

  m.def(
      "evaluate",
      [](const std::string& text, int p, int q) { return eval_string(text, Signature(p, q)); },
      py::arg("text"), py::arg("p"), py::arg("q"),
      "Parse and evaluate an expression over Cl(p,q).");

  m.def("geometric_product", &geometric_product);
  m.def("add", &add);
  m.def("scale", &scale);
  m.def("grade_project", &grade_project, py::arg("u"), py::arg("k"));
  m.def("even_part", &even_part);
  m.def("odd_part", &odd_part);
  m.def("approx_eq", &approx_eq, py::arg("u"), py::arg("v"), py::arg("tol") = 1e-9);
  m.def(
      "random_multivector",
      [](int p, int q, std::uint64_t seed, const std::string& profile) {
        return random_multivector(Signature(p, q), seed, profile_from(profile));
      },
      py::arg("p"), py::arg("q"), py::arg("seed"), py::arg("profile") = "full");

  m.def("complex_conjugate", &complex_conjugate);
  m.def("reverse", &reverse);
  m.def("grade_involution", &grade_involution);
  m.def("clifford_conjugation", &clifford_conjugation);
  m.def("pseudo_hermitian", &pseudo_hermitian);
  m.def("hermitian", &hermitian);
  m.def("grade_flip", &grade_flip, py::arg("u"), py::arg("grades"));
  m.def("nabla", &nabla);
  m.def("triangle", &triangle);
  m.def("plus_conj", &plus_conj);

  m.def("trace", &trace);
  m.def("trace_via_matrix", &trace_via_matrix);
  m.def("det", &det);
  m.def("det_via_matrix", &det_via_matrix);
  m.def("det_parity_n4", &det_parity_n4);
  m.def("inverse", [](const Multivector& u) { return inverse(u); });
  m.def("inverse", [](const Multivector& u, double tol) { return inverse(u, tol); },
        py::arg("u"), py::arg("tol"));
  m.def("is_invertible", [](const Multivector& u) { return is_invertible(u); });
  m.def("is_invertible", [](const Multivector& u, double tol) { return is_invertible(u, tol); },
        py::arg("u"), py::arg("tol"));

  m.def("represent", [](const Multivector& u) { return matrix_rows(represent(u)); },
        "Recurrent matrix representation as nested lists of complex entries.");
  m.def(
      "build_generators",
      [](int p, int q) {
        const auto rep = build_generators(Signature(p, q));
        std::vector<Rows> out;
        out.reserve(rep.generators.size());
        for (const auto& g : rep.generators) out.push_back(matrix_rows(g));
        return out;
      },
      py::arg("p"), py::arg("q"));

  m.attr("__version__") = "0.1.0";
}
