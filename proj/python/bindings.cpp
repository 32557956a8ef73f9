#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qv/cochain.hpp"
#include "qv/coloring.hpp"
#include "qv/error.hpp"
#include "qv/expansion.hpp"
#include "qv/invariant.hpp"
#include "qv/reference.hpp"
#include "qv/rmatrix.hpp"

namespace py = pybind11;
using namespace qv;

namespace {

std::string rational_text(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::vector<std::string> series_text(const HbarSeries& s) {
  std::vector<std::string> out;
  for (const auto& c : s.coeffs()) out.push_back(rational_text(c));
  return out;
}

std::map<std::string, std::int64_t> collapsed_text(const GroupRingElement& g) {
  std::map<std::string, std::int64_t> out;
  for (const auto& [e, c] : g.collapsed()) out[g.ring().format(e)] = c;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "quandle cocycle invariants of braid closures";

  static py::exception<Error> qv_error(m, "QvError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = qv_error;
      PyErr_SetObject(exc.ptr(), py::make_tuple(std::string(e.what()), std::string(to_string(e.code()))).ptr());
    }
  });

  py::class_<GroundRing>(m, "GroundRing")
      .def(py::init(&GroundRing::create), py::arg("p"), py::arg("h"))
      .def_property_readonly("p", &GroundRing::p)
      .def_property_readonly("order", &GroundRing::order)
      .def_property_readonly("degree", &GroundRing::degree)
      .def_property_readonly("is_field", &GroundRing::is_field)
      .def("elements",
           [](const GroundRing& r) {
             std::vector<std::string> out;
             for (auto e : r.elements()) out.push_back(r.format(e));
             return out;
           })
      .def("mul", [](const GroundRing& r, const std::string& x,
                     const std::string& y) { return r.format(r.mul(r.parse(x), r.parse(y))); })
      .def("add", [](const GroundRing& r, const std::string& x,
                     const std::string& y) { return r.format(r.add(r.parse(x), r.parse(y))); })
      .def("invert", [](const GroundRing& r, const std::string& x) { return r.format(r.invert(r.parse(x))); })
      .def("normalized_lift", [](const GroundRing& r, const std::string& x) { return r.normalized_lift(r.parse(x)).to_string(); })
      .def("__repr__", &GroundRing::describe);

  py::class_<AlexanderQuandle>(m, "Quandle")
      .def(py::init([](const GroundRing& r, const std::string& omega) { return AlexanderQuandle::create(r, r.parse(omega)); }),
           py::arg("ring"), py::arg("omega") = "w")
      .def_static("dihedral3", [] { return AlexanderQuandle::create(GroundRing::create(3, {1, 1}), RingElement{2}); })
      .def_property_readonly("order", &AlexanderQuandle::order)
      .def_property_readonly("ring", &AlexanderQuandle::ring)
      .def("op",
           [](const AlexanderQuandle& q, const std::string& x, const std::string& y) {
             const auto& r = q.ring();
             return r.format(q.op(r.parse(x), r.parse(y)));
           })
      .def("check_axioms", [](const AlexanderQuandle& q) { return check_axioms(q).passed; })
      .def("__repr__", &AlexanderQuandle::describe);

  py::class_<CochainPoly>(m, "Cochain")
      .def_static("named", [](const AlexanderQuandle& q, const std::string& name) { return named_cocycle(name, q).poly; })
      .def_static("parse", [](const std::string& text, std::int64_t p, int nvars) { return parse_cochain(text, p, nvars); },
                  py::arg("text"), py::arg("p"), py::arg("nvars") = 0)
      .def_property_readonly("nvars", &CochainPoly::nvars)
      .def("is_cocycle", [](const CochainPoly& f, const AlexanderQuandle& q) { return is_cocycle(f, q); })
      .def("__str__", &CochainPoly::to_string)
      .def("__repr__", [](const CochainPoly& f) { return "Cochain(" + f.to_string() + ")"; });

  m.def("basis_h2", [](const AlexanderQuandle& q) {
    std::vector<std::pair<std::string, CochainPoly>> out;
    for (const auto& e : basis_h2(q)) out.emplace_back(e.label(), e.poly);
    return out;
  });
  m.def("basis_h3", [](const AlexanderQuandle& q) {
    std::vector<std::pair<std::string, CochainPoly>> out;
    for (const auto& e : basis_h3(q)) out.emplace_back(e.family + ":" + e.label(), e.poly);
    return out;
  });

  py::class_<GroupRingElement>(m, "GroupRingElement")
      .def("eval_t1", &GroupRingElement::eval_t1)
      .def("collapsed", &collapsed_text)
      .def("to_yaml", [](const GroupRingElement& g) { return emit_groupring(g); })
      .def_static("from_yaml", [](const std::string& text) { return parse_groupring(text); })
      .def("__eq__", [](const GroupRingElement& a, const GroupRingElement& b) { return a == b; })
      .def("__str__", &GroupRingElement::to_string)
      .def("__repr__", [](const GroupRingElement& g) { return "GroupRingElement(" + g.to_string() + ")"; });

  m.def(
      "count_colorings",
      [](const AlexanderQuandle& q, const std::string& braid, const std::string& policy) {
        return enumerate_colorings(parse_braid(braid), q, parse_policy(policy, q.ring())).size();
      },
      py::arg("quandle"), py::arg("braid"), py::arg("policy") = "sum-all");

  m.def(
      "state_sum",
      [](const AlexanderQuandle& q, const std::string& braid, const CochainPoly& f, const std::string& policy,
         bool verify) {
        InvariantConfig config{f.nvars(), f, q, parse_policy(policy, q.ring()), {}};
        config.options.verify_cocycle = verify;
        return compute_invariant(parse_braid(braid), config);
      },
      py::arg("quandle"), py::arg("braid"), py::arg("cocycle"), py::arg("policy") = "sum-all", py::arg("verify") = true);

  m.def(
      "operator_invariant",
      [](const AlexanderQuandle& q, const std::string& braid, const CochainPoly& f) {
        return operator_invariant(parse_braid(braid), build_r_matrix(f, q));
      },
      py::arg("quandle"), py::arg("braid"), py::arg("cocycle"));

  m.def("check_yang_baxter", [](const AlexanderQuandle& q, const CochainPoly& f) {
    auto r = build_r_matrix(f, q);
    return check_yang_baxter(r) && markov_conditions(r);
  });

  m.def(
      "expand",
      [](const GroupRingElement& g, std::int64_t a, std::int64_t b, int D) {
        SubstitutionParams params{g.ring(), a, b, D};
        validate_substitution(params);
        return series_text(expand(g, params));
      },
      py::arg("value"), py::arg("a"), py::arg("b"), py::arg("D") = 8);

  m.def(
      "residues",
      [](const GroupRingElement& g, std::int64_t a, std::int64_t b, int D) {
        SubstitutionParams params{g.ring(), a, b, D};
        validate_substitution(params);
        auto r = vassiliev_coeffs(expand(g, params), g.ring().p());
        return py::make_tuple(r.residues, r.non_p_integral);
      },
      py::arg("value"), py::arg("a"), py::arg("b"), py::arg("D") = 8);

  py::class_<ReferenceExample>(m, "ReferenceExample")
      .def_readonly("name", &ReferenceExample::name)
      .def_readonly("n", &ReferenceExample::n)
      .def_readonly("display", &ReferenceExample::display)
      .def_property_readonly("braid", [](const ReferenceExample& e) { return e.braid.to_string(); })
      .def_property_readonly("a", [](const ReferenceExample& e) { return e.params.a; })
      .def_property_readonly("b", [](const ReferenceExample& e) { return e.params.b; })
      .def(
          "compute",
          [](const ReferenceExample& e, bool verify) {
            auto config = e.config;
            config.options.verify_cocycle = verify;
            return compute_invariant(e.braid, config);
          },
          py::arg("verify") = true);

  m.def("example110", &example110, py::arg("n"));
  m.def("example111", &example111, py::arg("n"));
}
