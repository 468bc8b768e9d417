// Python bindings for the main operations.  Exponents cross the boundary as
// Python ints (arbitrary precision on both sides).
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hall5/collector.hpp"
#include "hall5/errors.hpp"
#include "hall5/hallpolys.hpp"
#include "hall5/presentation.hpp"
#include "hall5/selftest.hpp"
#include "hall5/symcollect.hpp"

namespace py = pybind11;
using namespace hall5;

namespace {

Int to_int(const py::int_& v) {
  Int r;
  if (mpz_set_str(r.get_mpz_t(), py::str(v).cast<std::string>().c_str(), 10))
    throw Error("cannot convert python int");
  return r;
}

py::object from_int(const Int& v) {
  return py::module_::import("builtins").attr("int")(v.get_str());
}

ExponentVector to_vector(const py::sequence& seq) {
  ExponentVector out;
  for (const auto& item : seq) out.push_back(to_int(py::cast<py::int_>(item)));
  return out;
}

py::list from_vector(const ExponentVector& v) {
  py::list out;
  for (const Int& e : v) out.append(from_int(e));
  return out;
}

}  // namespace

PYBIND11_MODULE(hall5, m) {
  m.doc() =
      "Exact arithmetic in torsion free finitely generated nilpotent groups "
      "of Hirsch length at most 5";

  py::register_exception<InconsistentPresentation>(m, "InconsistentError");
  py::register_exception<ParseError>(m, "GroupParseError");
  py::register_exception<BadShape>(m, "BadShapeError");

  py::class_<GroupPresentation>(m, "Group")
      .def(py::init([](const std::string& json_text) {
             return GroupPresentation(constants_from_json_text(json_text));
           }),
           py::arg("json_text"),
           "Build a group from the JSON spec {\"n\": 5, \"t\": {\"123\": 1}}")
      .def_property_readonly("n", &GroupPresentation::n)
      .def_property_readonly("consistent", &GroupPresentation::consistent)
      .def("check_relations",
           [](const GroupPresentation& g) {
             ConsistencyReport report = consistency_direct(g);
             py::list failed;
             for (const auto& f : report.failures)
               failed.append(f.relation_id);
             return py::make_tuple(report.verdict, failed);
           },
           "Evaluate every defining relation; returns (verdict, failed ids)")
      .def("mul",
           [](const GroupPresentation& g, const py::sequence& a,
              const py::sequence& b) {
             return from_vector(
                 hall_multiply(g.constants(), to_vector(a), to_vector(b)));
           })
      .def("inv",
           [](const GroupPresentation& g, const py::sequence& a) {
             return from_vector(hall_inverse(g.constants(), to_vector(a)));
           })
      .def("pow",
           [](const GroupPresentation& g, const py::sequence& a,
              const py::int_& x) {
             return from_vector(
                 hall_power(g.constants(), to_vector(a), to_int(x)));
           })
      .def("mul_collected",
           [](const GroupPresentation& g, const py::sequence& a,
              const py::sequence& b) {
             return from_vector(collect_multiply(g, to_vector(a),
                                                 to_vector(b)));
           },
           "Product by plain collection, the ground-truth path")
      .def("pow_collected",
           [](const GroupPresentation& g, const py::sequence& a,
              const py::int_& x) {
             return from_vector(collect_power(g, to_vector(a), to_int(x)));
           });

  m.def("group_from_file",
        [](const std::string& path) { return load_group_file(path); });

  m.def("hall_polynomials", []() {
    const HallSystem h = theorem_polynomials();
    py::list out;
    for (int i = 1; i <= 5; ++i) out.append(h[i].to_string());
    return out;
  });

  m.def(
      "derive_matches_theorem",
      [](unsigned long seed, int points) {
        HallSystem derived =
            reduce_by_consistency(collect_symbolic(r_table()));
        ComparisonReport report = compare_with_theorem(
            derived, theorem_polynomials(), seed, points);
        return report.all_equivalent();
      },
      py::arg("seed") = 1, py::arg("points") = 50,
      "Re-derive the polynomials by symbolic collection and compare");

  m.def(
      "selftest",
      [](long trials, unsigned long seed) {
        SelftestOptions o;
        o.trials = trials;
        o.seed = seed;
        py::list out;
        bool all = true;
        for (const SuiteResult& r : run_selftest(o)) {
          all &= r.passed;
          out.append(py::make_tuple(r.name, r.passed, r.detail));
        }
        return py::make_tuple(all, out);
      },
      py::arg("trials") = 50, py::arg("seed") = 1);
}
