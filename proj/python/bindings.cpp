#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "sternpoly/contfrac.hpp"
#include "sternpoly/error.hpp"
#include "sternpoly/json_io.hpp"
#include "sternpoly/mahler.hpp"
#include "sternpoly/series.hpp"
#include "sternpoly/stern.hpp"
#include "sternpoly/verify.hpp"

namespace py = pybind11;
using namespace sternpoly;

namespace {

py::int_ to_py(const BigInt& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str(10).c_str(), nullptr, 10));
}

BigInt from_py(const py::int_& x) { return parse_bigint(py::str(x).cast<std::string>()); }

py::tuple to_py(const Rational& r) { return py::make_tuple(to_py(r.get_num()), to_py(r.get_den())); }

Rational rational_from_py(const py::int_& num, const py::int_& den) {
  return parse_rational(py::str(num).cast<std::string>() + "/" + py::str(den).cast<std::string>());
}

std::vector<py::tuple> terms(const SparsePoly& p) {
  std::vector<py::tuple> out;
  out.reserve(p.term_count());
  for (const auto& term : p.terms()) out.push_back(py::make_tuple(to_py(term.exp), to_py(term.coeff)));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Type-1 Stern polynomials, H_k(z) series, continued fractions and Mahler matrices";

  static py::exception<Error> stern_error(m, "SternError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object kind = py::str(std::string(to_string(e.kind())));
      PyErr_SetObject(stern_error.ptr(), py::make_tuple(py::str(e.what()), kind).ptr());
    }
  });

  m.def("stern_poly", [](long t, const py::int_& n) { return terms(stern_poly(t, from_py(n))); },
        py::arg("t"), py::arg("n"), "a_t(n; z) as a list of (exponent, coefficient) pairs");
  m.def("stern_value_at_one", [](long t, const py::int_& n) { return to_py(stern_value_at_one(t, from_py(n))); },
        py::arg("t"), py::arg("n"));
  m.def("alpha", [](long k, long n) { return to_py(alpha(k, n).value); }, py::arg("k"), py::arg("n"));
  m.def("closed_form_2k", [](long t, long k) { return terms(closed_form_2k(Params(t, k))); });
  m.def("closed_form_2k_minus_1", [](long t, long k) { return terms(closed_form_2k_minus_1(Params(t, k))); });

  m.def("h_series", [](long t, long k, std::size_t order) { return h_series(Params(t, k), order).bitstring(); },
        py::arg("t"), py::arg("k"), py::arg("order"), "H_k(z) mod z^order as a 0/1 string");
  m.def(
      "agreement_degree",
      [](long t, long k, long n) -> py::object {
        auto d = agreement_degree(Params(t, k), n);
        return d ? py::object(to_py(*d)) : py::none();
      },
      py::arg("t"), py::arg("k"), py::arg("n"));
  m.def(
      "eval_series_certified",
      [](long t, long k, const py::int_& num, const py::int_& den, std::size_t order) {
        const RationalInterval iv = eval_series_certified(Params(t, k), rational_from_py(num, den), order);
        return py::make_tuple(to_py(iv.lo), to_py(iv.hi));
      },
      py::arg("t"), py::arg("k"), py::arg("num"), py::arg("den"), py::arg("order"));

  m.def(
      "eval_cf",
      [](long t, long k, const py::int_& num, const py::int_& den, std::size_t depth) {
        std::vector<py::tuple> out;
        for (const auto& v : eval_cf_at_rational(Params(t, k), rational_from_py(num, den), depth))
          out.push_back(to_py(v));
        return out;
      },
      py::arg("t"), py::arg("k"), py::arg("num"), py::arg("den"), py::arg("depth"));
  m.def(
      "regular_cf",
      [](long t, long k, std::size_t depth) {
        const RegularCF rcf = regular_cf_transform(Params(t, k), depth);
        std::vector<py::tuple> out;
        for (const auto& term : rcf.terms) out.push_back(py::make_tuple(to_py(term.numerator), to_py(term.denominator)));
        return py::make_tuple(to_py(rcf.b0), out);
      },
      py::arg("t"), py::arg("k"), py::arg("depth"));

  m.def(
      "g_product",
      [](long t, long k, unsigned long n) {
        const GMatrix g = g_product(Params(t, k), n);
        return std::vector<std::vector<std::vector<py::tuple>>>{{terms(g(0, 0)), terms(g(0, 1))},
                                                                {terms(g(1, 0)), terms(g(1, 1))}};
      },
      py::arg("t"), py::arg("k"), py::arg("n"));

  m.def(
      "verify_json",
      [](std::vector<long> t_list, std::vector<long> k_list, std::size_t depth, std::size_t order,
         const std::string& suite, unsigned precision) {
        VerifyConfig config;
        config.t_list = std::move(t_list);
        config.k_list = std::move(k_list);
        config.depth = depth;
        config.order = order;
        config.suite = suite;
        config.precision = precision;
        VerifyOutcome outcome;
        {
          py::gil_scoped_release release;
          outcome = run_verify(config);
        }
        return outcome.report.to_json().dump();
      },
      py::arg("t_list"), py::arg("k_list"), py::arg("depth") = 5, py::arg("order") = 256,
      py::arg("suite") = "all", py::arg("precision") = 60);

  m.def("set_term_cap", &set_term_cap, py::arg("cap"));
  m.def("term_cap", &term_cap);
}
