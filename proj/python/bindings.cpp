#include <carlitz/omega.hpp>
#include <carlitz/report.hpp>
#include <carlitz/valuation.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

carlitz::Config make_config(unsigned q, const std::string& p, unsigned n, std::int64_t digits, unsigned series_degree,
                            bool analytic)
{
  carlitz::Config c;
  c.q = q;
  c.p = p;
  c.n = n;
  c.digits = digits;
  c.series_degree = series_degree;
  c.analytic = analytic;
  return c;
}

}  // namespace

PYBIND11_MODULE(_carlitz, m)
{
  m.doc() = "Exact Carlitz torsion-field computations";
  m.attr("__version__") = carlitz::kVersion;

  py::register_exception<carlitz::ConfigError>(m, "ConfigError", PyExc_ValueError);

  m.def("commands", &carlitz::command_names);

  m.def(
      "run_json",
      [](const std::string& command, unsigned q, const std::string& p, unsigned n, std::int64_t digits,
         unsigned series_degree, bool analytic) {
        carlitz::Report r;
        {
          py::gil_scoped_release release;
          r = carlitz::run_command(command, make_config(q, p, n, digits, series_degree, analytic));
        }
        return py::make_tuple(r.json.dump(), r.pass, r.lines);
      },
      py::arg("command"), py::arg("q"), py::arg("p"), py::arg("n") = 0, py::arg("digits") = 40,
      py::arg("series_degree") = 8, py::arg("analytic") = true,
      "Run one report command; returns (json text, pass, human-readable lines).");

  m.def(
      "describe",
      [](unsigned q, const std::string& p, unsigned n) {
        return carlitz::open_field(make_config(q, p, n, 40, 8, false)).describe();
      },
      py::arg("q"), py::arg("p"), py::arg("n") = 0);

  m.def(
      "omega",
      [](unsigned q, const std::string& p, unsigned n, unsigned j, unsigned k) {
        const auto& F = carlitz::open_field(make_config(q, p, n, 40, 8, false));
        if (j > n) throw py::value_error("derivative order exceeds the level");
        return carlitz::omega_value(F, j, k).format();
      },
      py::arg("q"), py::arg("p"), py::arg("n"), py::arg("j"), py::arg("k"),
      "omega^(j)(zeta_k) in the power basis of x_n.");

  m.def(
      "valuation",
      [](unsigned q, const std::string& p, unsigned n, unsigned j, unsigned k, unsigned i) {
        const auto& F = carlitz::open_field(make_config(q, p, n, 40, 8, false));
        if (j > n) throw py::value_error("derivative order exceeds the level");
        const carlitz::RationalVal v = carlitz::val_kn(carlitz::omega_value(F, j, k), i);
        return py::make_tuple(v.num(), v.den());
      },
      py::arg("q"), py::arg("p"), py::arg("n"), py::arg("j"), py::arg("k"), py::arg("i"),
      "v_i(omega^(j)(zeta_k)) as (numerator, denominator).");

  m.def(
      "carlitz_coeffs",
      [](unsigned q, const std::string& a) {
        return carlitz::carlitz_coeffs(carlitz::parse_poly(carlitz::base_field(q).get(), a), q).format();
      },
      py::arg("q"), py::arg("a"));
}
