#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ptc/greens.hpp"
#include "ptc/kernel.hpp"
#include "ptc/perturbation.hpp"
#include "ptc/quartic_nonpert.hpp"
#include "ptc/special_functions.hpp"
#include "ptc/spectral.hpp"
#include "ptc/suites.hpp"

namespace py = pybind11;
using namespace ptc;

namespace {

py::dict eigenpair_dict(const Eigenpair& p) {
  py::dict d;
  d["n"] = p.n;
  d["energy"] = p.energy;
  d["im_energy"] = p.im_energy;
  d["pt_norm"] = p.pt_norm;
  return d;
}

}  // namespace

PYBIND11_MODULE(_ptc, m) {
  m.doc() = "C operator of PT-symmetric cubic and quartic oscillators";
  m.attr("__version__") = kToolVersion;

  m.def(
      "eigenpair",
      [](const std::string& model, double eps, int n) { return eigenpair_dict(solve_shooting(parse_model(model), eps, n)); },
      py::arg("model"), py::arg("eps"), py::arg("n"), "Energy and PT norm of level n on the default contour.");
  m.def(
      "eigenfunction",
      [](const std::string& model, double eps, int n, const std::vector<double>& xs) {
        Eigenpair p = solve_shooting(parse_model(model), eps, n);
        std::vector<std::complex<double>> out;
        for (double x : xs) out.push_back(p.value_at(x));
        return out;
      },
      py::arg("model"), py::arg("eps"), py::arg("n"), py::arg("xs"), "PT-normalized eigenfunction at real points.");
  m.def(
      "perturbative_energy",
      [](const std::string& model, int n) {
        auto e = energy_series(symbolic_table(parse_model(model)), n);
        std::vector<std::string> out;
        for (int k = 0; k <= e.order(); ++k) out.push_back(to_text(e[k]));
        return out;
      },
      py::arg("model"), py::arg("n"), "Exact energy coefficients per power of eps.");
  m.def(
      "c_kernel_text", [](int order) { return to_text(c_from_eigenfunctions(order)); }, py::arg("order") = 3,
      "Term list of the perturbative C kernel.");
  m.def(
      "cpt_norm",
      [](const std::string& model, const std::vector<std::string>& coeffs) {
        std::vector<Scalar> c;
        for (const auto& s : coeffs) c.push_back(parse_scalar(s));
        CptGram g(symbolic_table(parse_model(model)), static_cast<int>(c.size()));
        std::vector<std::string> out;
        for (const auto& s : g.norm(c)) out.push_back(s.text());
        return out;
      },
      py::arg("model"), py::arg("coeffs"), "Exact <f|f> per power of eps for f = sum c_n phi_n.");
  m.def(
      "greens", [](int order, double x, double y) { return greens_value(order, x, y); }, py::arg("order"), py::arg("x"),
      py::arg("y"), "G_k(x, y).");
  m.def(
      "nonpert_c_sum",
      [](double x, double y, double eps, int terms) {
        auto s = nonpert_c_sum(x, y, eps, terms);
        return py::make_tuple(s.value, s.remainder_estimate);
      },
      py::arg("x"), py::arg("y"), py::arg("eps"), py::arg("terms") = 0, "Nonperturbative correction and tail bound.");
  m.def(
      "nonpert_c_integral",
      [](double x, double y, double eps) {
        auto s = nonpert_c_integral(x, y, eps);
        return py::make_tuple(s.value, s.error_estimate);
      },
      py::arg("x"), py::arg("y"), py::arg("eps"), "Double-integral form of the correction.");
  m.def("parabolic_d_half", [](double z) { return parabolic_d_half(z).value; }, py::arg("z"));
  m.def("c_second_solution", [](int n, double z) { return c_second_solution(n, z).value; }, py::arg("n"), py::arg("z"));
  m.def(
      "verify_json",
      [](const std::string& profile, std::uint64_t seed, bool mutate) {
        SuiteOptions opt;
        opt.profile = parse_profile(profile);
        opt.seed = seed;
        SymbolicTable bad;
        if (mutate) {
          bad = mutated_cubic_table();
          opt.cubic_table = &bad;
        }
        py::gil_scoped_release release;
        return run_all(opt).to_json().dump();
      },
      py::arg("profile") = "quick", py::arg("seed") = 42, py::arg("mutate") = false, "Verification report as JSON text.");

  py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);
  py::register_exception<SpecialFunctionError>(m, "SpecialFunctionError", PyExc_RuntimeError);
}
