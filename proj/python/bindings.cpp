#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polya/certify.hpp"
#include "polya/closed_forms.hpp"
#include "polya/constants.hpp"
#include "polya/error.hpp"
#include "polya/fem.hpp"
#include "polya/harness.hpp"
#include "polya/poly.hpp"
#include "polya/report.hpp"

namespace py = pybind11;
using namespace polya;

namespace {

harness::ReplayOptions replay_options(int upper_samples, int upper_level, int thinning_level, int cert_depth) {
  harness::ReplayOptions o;
  o.upper_samples = upper_samples;
  o.upper_level = upper_level;
  o.thinning_level = thinning_level;
  o.cert_depth = cert_depth;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Core routines of polya_verify";

  static py::exception<Error> py_error(m, "PolyaError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(py_error, e.what());
    }
  });

  py::class_<fem::SpectralResult>(m, "SpectralResult")
      .def_readonly("lambda1", &fem::SpectralResult::lambda1)
      .def_readonly("T", &fem::SpectralResult::T)
      .def_readonly("torsion_max", &fem::SpectralResult::torsion_max)
      .def_readonly("F", &fem::SpectralResult::F)
      .def_readonly("area", &fem::SpectralResult::area)
      .def_readonly("h_sequence", &fem::SpectralResult::h_sequence)
      .def_readonly("lambda_levels", &fem::SpectralResult::lambda_levels)
      .def_readonly("T_levels", &fem::SpectralResult::T_levels)
      .def_readonly("error_gauge", &fem::SpectralResult::error_gauge)
      .def_readonly("max_level", &fem::SpectralResult::max_level)
      .def("to_json", [](const fem::SpectralResult& s) { return report::to_json(s); });

  py::class_<closed_forms::SeriesValue>(m, "SeriesValue")
      .def_readonly("value", &closed_forms::SeriesValue::value)
      .def_readonly("tail_bound", &closed_forms::SeriesValue::tail_bound)
      .def_readonly("terms_used", &closed_forms::SeriesValue::terms_used);

  m.def(
      "spectral_triangle", [](double a, double b, int level) { return fem::spectral(geometry::Triangle{a, b}, level); },
      py::arg("a"), py::arg("b"), py::arg("level") = 7, py::call_guard<py::gil_scoped_release>());
  m.def(
      "spectral_rectangle", [](double a, double b, int level) { return fem::spectral(geometry::Rectangle{a, b}, level); },
      py::arg("a"), py::arg("b"), py::arg("level") = 7, py::call_guard<py::gil_scoped_release>());

  m.def("rect_lambda1", [](double a, double b) { return closed_forms::rect_lambda1({a, b}); }, py::arg("a"), py::arg("b"));
  m.def(
      "rect_torsion", [](double a, double b, int n) { return closed_forms::rect_torsion({a, b}, n); }, py::arg("a"), py::arg("b"),
      py::arg("terms") = closed_forms::kDefaultTerms);
  m.def(
      "rect_F", [](double a, double b, int n) { return closed_forms::rect_F({a, b}, n); }, py::arg("a"), py::arg("b"),
      py::arg("terms") = closed_forms::kDefaultTerms);
  m.def(
      "rect_center_torsion", [](double a, double b, int n) { return closed_forms::rect_center_torsion({a, b}, n); }, py::arg("a"),
      py::arg("b"), py::arg("terms") = closed_forms::kDefaultTerms);
  m.def("equilateral_exact", [] {
    const auto e = closed_forms::equilateral_exact();
    return py::dict(py::arg("T") = e.T, py::arg("lambda1") = e.lambda1, py::arg("F") = e.F);
  });
  m.def("bessel_first_zero", &closed_forms::bessel_first_zero, py::arg("nu"));

  m.def(
      "enclose",
      [](const std::string& name, const std::string& eps) {
        const auto iv = constants::enclose(name, parse_rational(eps));
        return py::make_tuple(to_string(iv.lo()), to_string(iv.hi()));
      },
      py::arg("name"), py::arg("eps") = "1/1000000000000");

  m.def(
      "certify",
      [](const std::vector<std::string>& coeffs, const std::string& dx, int depth) {
        std::vector<Rational> c;
        for (const auto& s : coeffs) c.push_back(parse_rational(s));
        const auto cert = certify::certify_nonpositive(poly::RationalPoly(std::move(c)), parse_rational(dx), depth);
        return py::make_tuple(cert.ok(), certify::to_json(cert));
      },
      py::arg("coeffs"), py::arg("dx"), py::arg("depth") = certify::kDefaultMaxDepth);

  m.def(
      "case_function", [](const std::string& name, double a, double b) { return harness::case_function(name, a, b); }, py::arg("name"),
      py::arg("a"), py::arg("b") = 0.0);
  m.def(
      "case_function_exact",
      [](const std::string& name, const std::string& a, const std::string& b) {
        return to_string(harness::case_function_exact(name, parse_rational(a), parse_rational(b)));
      },
      py::arg("name"), py::arg("a"), py::arg("b"));
  m.def("case_ids", [] {
    std::vector<std::string> ids;
    for (auto id : harness::case_ids()) ids.emplace_back(id);
    return ids;
  });
  m.def(
      "replay_case",
      [](const std::string& id, int upper_samples, int upper_level, int thinning_level, int cert_depth) {
        harness::CaseReport r;
        {
          py::gil_scoped_release release;
          r = harness::replay_case(id, replay_options(upper_samples, upper_level, thinning_level, cert_depth));
        }
        return report::to_json(r);
      },
      py::arg("case_id"), py::arg("upper_samples") = 500, py::arg("upper_level") = 5, py::arg("thinning_level") = 9,
      py::arg("cert_depth") = certify::kDefaultMaxDepth);
  m.def(
      "sweep_csv",
      [](int na, int nb, double b_min, double b_max, int level) {
        harness::SweepConfig c;
        c.na = na;
        c.nb = nb;
        c.b_min = b_min;
        c.b_max = b_max;
        c.max_level = level;
        py::gil_scoped_release release;
        return harness::sweep_csv(harness::sweep_triangles(c));
      },
      py::arg("na"), py::arg("nb"), py::arg("b_min") = 0.02, py::arg("b_max") = 0.8660254037844386, py::arg("level") = 7);
  m.def("g_remark", [] { return report::to_json(harness::g_remark_check()); });
}
