#include "eulerpoly/audit.hpp"
#include "eulerpoly/bernoulli.hpp"
#include "eulerpoly/congruence.hpp"
#include "eulerpoly/eulerian.hpp"
#include "eulerpoly/shift.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>

namespace py = pybind11;
using namespace eulerpoly;

namespace {

// Numbers cross the boundary as text: Python values go through str(), results
// come back as fractions.Fraction / int built from the exact decimal form.
Rational to_rational(const py::handle& value) {
  return parse_rational(py::str(value).cast<std::string>());
}

Polynomial to_polynomial(const py::iterable& coefficients) {
  std::vector<Rational> c;
  for (const auto& v : coefficients) c.push_back(to_rational(v));
  return Polynomial(std::move(c));
}

py::object fraction(const Rational& r) {
  static const py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_string(r));
}

py::object integer(const Integer& z) { return py::int_(py::str(to_string(z))); }

py::list from_polynomial(const Polynomial& p) {
  py::list out;
  for (const auto& c : p.coefficients()) out.append(fraction(c));
  return out;
}

py::dict report_dict(const CongruenceReport& r) {
  py::dict d;
  d["ell"] = r.ell;
  d["m"] = r.m;
  d["f"] = from_polynomial(r.f);
  d["holds"] = r.holds;
  d["remainder"] = from_polynomial(r.remainder);
  d["quotient"] = from_polynomial(r.quotient);
  d["defect"] = from_polynomial(r.defect);
  return d;
}

}  // namespace

PYBIND11_MODULE(_eulerpoly, m) {
  m.doc() = "Exact Eulerian, Bernoulli and Linial polynomial computations";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const std::domain_error& e) {
      PyErr_SetString(PyExc_ArithmeticError, e.what());
    }
  });

  m.def("eulerian_poly", [](unsigned ell) { return from_polynomial(eulerian_poly(ell)); },
        py::arg("ell"));
  m.def(
      "eulerian_table",
      [](unsigned ell) {
        py::list rows;
        for (const auto& row : eulerian_table(ell).rows) {
          py::list r;
          for (const auto& v : row) r.append(integer(v));
          rows.append(r);
        }
        return rows;
      },
      py::arg("ell"));
  m.def("eulerian_number", [](unsigned ell, long k) { return integer(eulerian_number_direct(ell, k)); },
        py::arg("ell"), py::arg("k"));
  m.def("alpha_polynomial",
        [](const py::iterable& f, unsigned ell) {
          return from_polynomial(alpha_polynomial(to_polynomial(f), ell));
        },
        py::arg("f"), py::arg("ell"));

  m.def("bernoulli_poly", [](unsigned ell) { return from_polynomial(bernoulli_poly(ell).poly); },
        py::arg("ell"));
  m.def("bernoulli_number_from_eulerian",
        [](unsigned ell) { return fraction(bernoulli_number_from_eulerian(ell)); }, py::arg("ell"));
  m.def("zeta_negative", [](unsigned ell) { return fraction(zeta_negative(ell)); }, py::arg("ell"));

  m.def("taylor_shift",
        [](const py::iterable& p, const py::object& c) {
          return from_polynomial(taylor_shift(to_polynomial(p), to_rational(c)));
        },
        py::arg("p"), py::arg("c"));
  m.def(
      "remainder_mod_power",
      [](const py::iterable& p, const py::object& c, unsigned k) {
        const PowerDivision d = remainder_mod_power(to_polynomial(p), to_rational(c), k);
        return py::make_tuple(from_polynomial(d.quotient), from_polynomial(d.remainder));
      },
      py::arg("p"), py::arg("c"), py::arg("k"));

  m.def("congruence_report",
        [](const py::iterable& f, unsigned ell, unsigned m_) {
          return report_dict(congruence_report(to_polynomial(f), ell, m_));
        },
        py::arg("f"), py::arg("ell"), py::arg("m"));
  m.def("eulerian_congruence_report",
        [](unsigned ell, unsigned m_) { return report_dict(eulerian_congruence_report(ell, m_)); },
        py::arg("ell"), py::arg("m"));
  m.def(
      "solve_characterization",
      [](unsigned ell, unsigned m_) {
        const CharacterizationSolution s = solve_characterization(ell, m_);
        py::dict d;
        d["ell"] = s.ell;
        d["m"] = s.m;
        d["solution"] = from_polynomial(s.solution);
        d["rank"] = s.system_rank;
        d["unique"] = s.unique;
        return d;
      },
      py::arg("ell"), py::arg("m"));
  m.def("even_ell_strengthening",
        [](unsigned ell, unsigned m_) { return even_ell_strengthening(ell, m_).holds; }, py::arg("ell"),
        py::arg("m"));

  m.def(
      "linial_char_poly",
      [](unsigned ell, unsigned m_, const std::string& method) {
        if (method == "averaging") return from_polynomial(linial_char_poly_ps(ell, m_));
        if (method == "eulerian") return from_polynomial(linial_char_poly_worp(ell, m_));
        throw std::invalid_argument("method must be 'averaging' or 'eulerian'");
      },
      py::arg("ell"), py::arg("m") = 1, py::arg("method") = "averaging");
  m.def("worpitzky_check", [](unsigned ell) { return worpitzky_check(ell).holds; }, py::arg("ell"));

  m.def(
      "run_audit",
      [](unsigned max_ell, unsigned max_m, std::uint64_t seed) {
        AuditOptions options;
        options.max_ell = max_ell;
        options.max_m = max_m;
        options.seed = seed;
        py::list out;
        for (const auto& c : run_audit(options)) {
          py::dict d;
          d["name"] = c.name;
          d["cases"] = c.cases;
          d["failures"] = c.failures;
          d["first_failure"] = c.first_failure;
          out.append(d);
        }
        return out;
      },
      py::arg("max_ell") = 6, py::arg("max_m") = 4, py::arg("seed") = 42);
}
