// Python bindings for the recgeo core.  Big integers cross the boundary as
// Python ints and rationals as fractions.Fraction; polynomials may be given
// either as Poly objects or as strings in the parser grammar.

#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <sstream>

#include "recgeo/classifier.hpp"
#include "recgeo/cli.hpp"
#include "recgeo/errors.hpp"
#include "recgeo/factor.hpp"
#include "recgeo/generators.hpp"
#include "recgeo/parser.hpp"
#include "recgeo/primes.hpp"
#include "recgeo/sequence.hpp"

namespace py = pybind11;
using namespace recgeo;

namespace {

py::object to_py(const Integer& v) { return py::module_::import("builtins").attr("int")(to_string(v)); }

py::object to_py(const Rational& v) { return py::module_::import("fractions").attr("Fraction")(to_string(v)); }

Integer from_py(const py::int_& v) { return Integer(py::str(v).cast<std::string>(), 10); }

py::list to_py_list(const std::vector<Integer>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_py(v));
  return out;
}

Poly as_poly(const py::object& obj) {
  if (py::isinstance<py::str>(obj)) return parse_poly(obj.cast<std::string>());
  return obj.cast<Poly>();
}

py::dict classification_dict(const Classification& c) {
  py::dict d;
  d["classification"] = std::string(classification_tag(c));
  if (const auto* g = std::get_if<Geometric>(&c)) {
    d["b"] = to_py(g->ratio);
    d["c"] = to_py(g->coeff);
  } else if (const auto* u = std::get_if<UltimatelyGeometric>(&c)) {
    d["b"] = to_py(u->ratio);
    d["c"] = to_py(u->coeff);
    d["n0"] = to_py(u->onset);
  } else if (const auto* n = std::get_if<NotUltimatelyGeometric>(&c)) {
    d["reason"] = std::string(reason_name(n->reason));
  }
  return d;
}

py::dict report_dict(const PrimeReport& r) {
  py::list primes;
  py::dict first;
  for (const auto& p : r.primes) {
    primes.append(to_py(p));
    first[to_py(p)] = r.first_occurrence.at(p);
  }
  py::list unfactored;
  for (const auto& u : r.unfactored) unfactored.append(py::make_tuple(u.index, to_py(u.value)));
  py::dict d;
  d["primes"] = primes;
  d["first_occurrence"] = first;
  d["terms_scanned"] = r.terms_scanned;
  d["zero_terms"] = r.zero_term_indices;
  d["unfactored"] = unfactored;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computation and classification of recurrences a_n = f(n) a_{n-1} + g(n) h(n)^n";

  py::register_exception<SyntaxError>(m, "SyntaxError", PyExc_ValueError);
  py::register_exception<DivisionByZero>(m, "DivisionByZero", PyExc_ZeroDivisionError);
  py::register_exception<PreconditionViolated>(m, "PreconditionViolated", PyExc_ValueError);
  py::register_exception<NonIntegerValue>(m, "NonIntegerValue", PyExc_ArithmeticError);
  py::register_exception<ZeroPolynomial>(m, "ZeroPolynomial", PyExc_ValueError);
  py::register_exception<CheckpointCorrupt>(m, "CheckpointCorrupt", PyExc_RuntimeError);

  py::class_<Poly>(m, "Poly")
      .def(py::init([](const std::string& text) { return parse_poly(text); }), py::arg("text"))
      .def_static("falling_factorial", &Poly::falling_factorial)
      .def_static("binomial", &Poly::binomial)
      .def_property_readonly("coeffs",
                             [](const Poly& p) {
                               py::list out;
                               for (const auto& c : p.coeffs()) out.append(to_py(c));
                               return out;
                             })
      .def_property_readonly("degree", [](const Poly& p) -> py::object {
        if (auto d = p.degree()) return py::int_(*d);
        return py::none();
      })
      .def("eval", [](const Poly& p, const py::int_& n) { return to_py(p.eval(from_py(n))); })
      .def("eval_int", [](const Poly& p, const py::int_& n) { return to_py(p.eval_int(from_py(n))); })
      .def("is_integer_valued", &Poly::is_integer_valued)
      .def("to_binomial_basis",
           [](const Poly& p) {
             py::list out;
             for (const auto& c : p.to_binomial_basis()) out.append(to_py(c));
             return out;
           })
      .def("nonneg_integer_roots", [](const Poly& p) { return to_py_list(p.nonneg_integer_roots()); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__str__", &print_poly)
      .def("__repr__", [](const Poly& p) { return "Poly('" + print_poly(p) + "')"; });

  m.def("parse_poly", [](const std::string& text) { return parse_poly(text); });
  m.def("print_poly", &print_poly);

  py::class_<SeqSpec>(m, "SeqSpec")
      .def(py::init([](const py::object& f, const py::object& g, const py::object& h) {
             return SeqSpec(as_poly(f), as_poly(g), as_poly(h));
           }),
           py::arg("f"), py::arg("g"), py::arg("h"))
      .def_property_readonly("f", &SeqSpec::f)
      .def_property_readonly("g", &SeqSpec::g)
      .def_property_readonly("h", &SeqSpec::h)
      .def("__repr__", [](const SeqSpec& s) {
        return "SeqSpec(f='" + print_poly(s.f()) + "', g='" + print_poly(s.g()) + "', h='" + print_poly(s.h()) + "')";
      });

  m.def("terms", [](const SeqSpec& s, std::uint64_t count) { return to_py_list(terms(s, count)); });
  m.def("product_closed_form",
        [](const SeqSpec& s, std::uint64_t count) { return to_py_list(product_closed_form(s, count)); });
  m.def("deviation", [](const SeqSpec& s, const py::int_& b, const py::int_& c, std::uint64_t count) {
    return to_py_list(deviation(s, from_py(b), from_py(c), count));
  });
  m.def("empirical_geometric_tail", [](const std::vector<py::int_>& window) -> py::object {
    std::vector<Integer> w;
    for (const auto& v : window) w.push_back(from_py(v));
    const auto fit = empirical_geometric_tail(w);
    if (!fit) return py::none();
    py::dict d;
    d["b"] = to_py(fit->ratio);
    d["c"] = to_py(fit->coeff);
    d["n0"] = fit->onset;
    return d;
  });

  m.def("classify", [](const SeqSpec& s) { return classification_dict(classify(s)); });
  m.def("candidate_coeff", [](const py::object& f, const py::object& g, const py::int_& b) -> py::object {
    const auto c = candidate_coeff(as_poly(f), as_poly(g), from_py(b));
    return c ? to_py(*c) : py::none();
  });
  m.def("certify_finite_prime_set", [](const SeqSpec& s) -> py::object {
    const auto cert = certify_finite_prime_set(s);
    if (!cert) return py::none();
    py::list primes;
    for (const auto& p : cert->prime_bound) primes.append(to_py(p));
    py::dict d;
    d["primes"] = primes;
    d["caveat_zero_term"] = cert->caveat_zero_term;
    return d;
  });

  m.def("is_prime", [](const py::int_& n) { return is_prime(from_py(n)); });
  m.def(
      "factor",
      [](const py::int_& n, std::uint64_t rho_budget) {
        FactorOptions o;
        o.rho_budget = rho_budget;
        const auto f = factor(from_py(n), o);
        py::dict d;
        d["primes"] = to_py_list(f.primes);
        d["unfactored"] = to_py_list(f.unfactored);
        return d;
      },
      py::arg("n"), py::arg("rho_budget") = FactorOptions{}.rho_budget);
  m.def("prime_set_up_to", [](const SeqSpec& s, std::uint64_t count) { return report_dict(prime_set_up_to(s, count)); });
  m.def("prime_growth_curve",
        [](const SeqSpec& s, const std::vector<std::uint64_t>& checkpoints) { return prime_growth_curve(s, checkpoints); });

  m.def("family_names", [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : families()) out.push_back(name);
    return out;
  });
  m.def(
      "family",
      [](const std::string& name, const py::kwargs& params) {
        const auto it = families().find(name);
        if (it == families().end()) throw PreconditionViolated("unknown family " + name);
        std::vector<Integer> args;
        for (const auto& p : it->second.params) {
          if (!params.contains(p)) throw PreconditionViolated("family " + name + " needs parameter " + p);
          args.push_back(from_py(params[p.c_str()].cast<py::int_>()));
        }
        const FamilyInstance inst = it->second.make(args);
        py::dict d;
        d["spec"] = inst.spec;
        d["claimed"] = inst.claimed ? py::object(classification_dict(*inst.claimed)) : py::none();
        auto predicted = inst.predicted_term;
        d["predicted"] = py::cpp_function([predicted](std::uint64_t n) { return to_py(predicted(n)); });
        return d;
      },
      py::arg("name"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
