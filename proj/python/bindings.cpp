#include "gwitt/derivations.hpp"
#include "gwitt/ideals.hpp"
#include "gwitt/structure.hpp"
#include "gwitt/syntax.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace gwitt;

namespace {

Rational to_rational(const py::handle& value) {
  if (py::isinstance<py::int_>(value)) return parse_rational(py::str(value).cast<std::string>());
  if (py::hasattr(value, "numerator") && py::hasattr(value, "denominator")) {
    const std::string text = py::str(value.attr("numerator")).cast<std::string>() + "/" +
                             py::str(value.attr("denominator")).cast<std::string>();
    return parse_rational(text);
  }
  return parse_rational(py::str(value).cast<std::string>());
}

py::object to_fraction(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::int_(py::str(q.get_num().get_str())), py::int_(py::str(q.get_den().get_str())));
}

AlgebraConfig make_config(int n, const std::optional<std::vector<py::object>>& slopes) {
  if (!slopes) return AlgebraConfig::standard(n);
  std::vector<Rational> values;
  for (const auto& s : *slopes) values.push_back(to_rational(s));
  return AlgebraConfig(n, std::move(values));
}

const char* stop_name(StopReason reason) {
  switch (reason) {
    case StopReason::targets_reached: return "targets-reached";
    case StopReason::fixpoint: return "fixpoint";
    case StopReason::iteration_limit: return "iteration-limit";
  }
  return "";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact arithmetic in generalized Witt algebras";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<SearchExhausted>(m, "SearchExhausted", PyExc_RuntimeError);
  py::register_exception<NotADerivation>(m, "NotADerivation", PyExc_ValueError);

  py::class_<AlgebraConfig>(m, "Algebra")
      .def(py::init(&make_config), py::arg("n") = 1, py::arg("slopes") = py::none())
      .def_property_readonly("n", &AlgebraConfig::rank)
      .def_property_readonly("slopes",
                             [](const AlgebraConfig& cfg) {
                               py::list out;
                               for (const auto& s : cfg.slopes()) out.append(to_fraction(s));
                               return out;
                             })
      .def("parse", [](const AlgebraConfig& cfg, const std::string& text) { return parse_element(text, cfg.rank()); })
      .def("__repr__", [](const AlgebraConfig& cfg) {
        std::ostringstream os;
        os << "Algebra(n=" << cfg.rank() << ", slopes=[";
        for (std::size_t p = 0; p < cfg.slopes().size(); ++p) os << (p ? ", " : "") << to_string(cfg.slopes()[p]);
        os << "])";
        return os.str();
      });

  py::class_<Element>(m, "Element")
      .def(py::init<>())
      .def("is_zero", &Element::is_zero)
      .def("__len__", &Element::size)
      .def("__bool__", [](const Element& x) { return !x.is_zero(); })
      .def("terms",
           [](const Element& x) {
             py::list out;
             for (const auto& t : x) out.append(py::make_tuple(format_basis(t.key), to_fraction(t.coef)));
             return out;
           })
      .def("__add__", [](const Element& x, const Element& y) { return x + y; })
      .def("__sub__", [](const Element& x, const Element& y) { return x - y; })
      .def("__neg__", [](const Element& x) { return Rational(-1) * x; })
      .def("__mul__", [](const Element& x, const py::object& s) { return to_rational(s) * x; })
      .def("__rmul__", [](const Element& x, const py::object& s) { return to_rational(s) * x; })
      .def("__eq__", [](const Element& x, const Element& y) { return x == y; })
      .def("__str__", &format_element)
      .def("__repr__", [](const Element& x) { return "Element('" + format_element(x) + "')"; });

  m.def("bracket", py::overload_cast<const AlgebraConfig&, const Element&, const Element&>(&bracket),
        py::arg("algebra"), py::arg("x"), py::arg("y"));

  m.def("grade", [](const Element& x) {
    py::list out;
    for (const auto& [degree, component] : decompose(x)) {
      py::tuple d(degree.values.size());
      for (std::size_t r = 0; r < degree.values.size(); ++r) d[r] = py::int_(degree.values[r]);
      out.append(py::make_tuple(d, component));
    }
    return out;
  });

  m.def("lex_cmp", [](const AlgebraConfig& cfg, const std::string& x, const std::string& y) {
    const auto order = lex_cmp(parse_basis(x, cfg.rank()), parse_basis(y, cfg.rank()));
    return order < 0 ? -1 : (order > 0 ? 1 : 0);
  });
  m.def("string_number", &string_number);
  m.def("lp", [](const Element& x) {
    if (x.is_zero()) throw py::value_error("lp is undefined for the zero element");
    return lp(x);
  });

  m.def("lemma1", [](const AlgebraConfig& cfg, const Element& l) {
    const Lemma1Result r = lemma1_multiplier(cfg, l);
    return py::make_tuple(format_basis(r.multiplier), r.result);
  });

  m.def(
      "ideal_witness",
      [](const AlgebraConfig& cfg, const Element& l, std::pair<Index, Index> mbox, std::pair<Index, Index> rbox,
         int max_iter) {
        const IdealClosure c = ideal_closure(cfg, l, {mbox.first, mbox.second}, {rbox.first, rbox.second}, max_iter);
        py::dict out;
        out["rank"] = c.report.rank;
        out["multipliers"] = c.report.multiplier_count;
        out["iterations"] = c.report.iterations;
        out["reached"] = c.report.reached_targets;
        out["saturated"] = c.report.saturated;
        out["stop"] = stop_name(c.report.stop);
        return out;
      },
      py::arg("algebra"), py::arg("l"), py::arg("mbox") = std::pair<Index, Index>{2, 2},
      py::arg("rbox") = std::pair<Index, Index>{4, 4}, py::arg("max_iter") = 20);

  m.def(
      "ad_diag",
      [](const AlgebraConfig& cfg, const Element& l, std::pair<Index, Index> box) -> std::optional<std::string> {
        const auto witness = ad_diag_check(cfg, l, {box.first, box.second});
        if (!witness) return std::nullopt;
        return format_basis(*witness);
      },
      py::arg("algebra"), py::arg("l"), py::arg("box") = std::pair<Index, Index>{2, 2});

  m.def("integrate", [](const AlgebraConfig& cfg, const std::string& f) {
    return format_function(integrate(cfg, parse_function(f, cfg.rank())));
  });

  m.def("verify_derivation", [](const AlgebraConfig& cfg, const std::string& table) {
    py::list out;
    for (const auto& v : verify_derivation(cfg, parse_derivation_table(table)))
      out.append(py::make_tuple(format_basis(v.left), format_basis(v.right)));
    return out;
  });

  m.def("decompose_derivation", [](const AlgebraConfig& cfg, const std::string& table) {
    const Decomposition d = decompose(cfg, parse_derivation_table(table));
    return py::make_tuple(d.inner, to_fraction(d.c), to_fraction(d.s));
  });
}
