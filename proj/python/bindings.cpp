#include "cocycle/cochains.hpp"
#include "cocycle/configured.hpp"
#include "cocycle/error.hpp"
#include "cocycle/hamiltonian.hpp"
#include "cocycle/suites.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <variant>

namespace py = pybind11;
using namespace cocycle;

namespace {

FiniteGroupTable group_from(const std::variant<int, std::string>& g) {
  if (std::holds_alternative<int>(g)) return FiniteGroupTable::cyclic(std::get<int>(g));
  const std::string& name = std::get<std::string>(g);
  if (name == "Q8") return FiniteGroupTable::quaternion8();
  if (name == "2T") return FiniteGroupTable::binary_tetrahedral();
  throw Error(ErrorCode::InvalidArgument, "unknown group '" + name + "' (expected an order, 'Q8' or '2T')");
}

Predicate predicate_from(const std::string& p) {
  for (Predicate q : {Predicate::conf_distinct, Predicate::distinct_hopf, Predicate::all_tuples})
    if (to_string(q) == p) return q;
  throw Error(ErrorCode::InvalidArgument, "unknown predicate '" + p + "'");
}

py::object json_loads(const std::string& s) { return py::module_::import("json").attr("loads")(s); }

}  // namespace

PYBIND11_MODULE(_cocycle, m) {
  m.doc() = "Numerical checks of group cocycles on SU(2), S^3 and finite groups";
  py::register_exception<Error>(m, "CocycleError", PyExc_RuntimeError);

  m.def(
      "quat_exp", [](const Vec3& x) { return quat_exp(x).vec(); }, py::arg("x"),
      "Unit quaternion (w, x, y, z) = exp of the imaginary quaternion x.");
  m.def(
      "quat_mul", [](const Vec4& a, const Vec4& b) { return quat_mul(a, b); }, py::arg("a"), py::arg("b"));
  m.def(
      "hopf", [](const Vec4& q) { return hopf(UnitQuaternion(q)); }, py::arg("q"),
      "Hopf map onto the radius-1/2 sphere; fibers are e^{it} q.");
  m.def(
      "so3_of", [](const Vec4& q) { return Eigen::MatrixXd(so3_of(UnitQuaternion(q)).matrix()); }, py::arg("q"));
  m.def(
      "so4_of",
      [](const Vec4& a, const Vec4& b) { return Eigen::MatrixXd(so4_of(UnitQuaternion(a), UnitQuaternion(b)).matrix()); },
      py::arg("a"), py::arg("b"), "Matrix of x -> a x b^{-1}.");

  m.def(
      "cs_pairing",
      [](int order, int seed) {
        const PairingResult r = cs_pairing(order, {}, static_cast<std::uint64_t>(seed));
        py::dict d;
        d["m"] = r.m;
        d["value"] = r.value;
        d["error"] = r.error;
        d["base_admissible"] = r.base_admissible;
        d["note"] = r.note;
        return d;
      },
      py::arg("m"), py::arg("seed") = 0x5EED);
  m.def("degree_c1", [] { return degree_of_map(c1_map()).value; });
  m.def("degree_c2", [] { return degree_of_map(c2_map()).value; });
  m.def("beta_symplectic_xyz", [] {
    return beta_symplectic(SphereFunction::coordinate(0), SphereFunction::coordinate(1), SphereFunction::coordinate(2))
        .value;
  });
  m.def("beta_contact_xyz", [] {
    return beta_contact(ContactFunction::pullback(SphereFunction::coordinate(0)),
                        ContactFunction::pullback(SphereFunction::coordinate(1)),
                        ContactFunction::pullback(SphereFunction::coordinate(2)))
        .value;
  });

  m.def(
      "homology",
      [](const std::variant<int, std::string>& group, const std::string& predicate, int q) {
        const auto C = build_configured(group_from(group), predicate_from(predicate), q);
        return json_loads(homology_report_json(C));
      },
      py::arg("group"), py::arg("predicate") = "conf-distinct", py::arg("q") = 3,
      "Homology report of the configured complex in degrees below q.");

  m.def("list_suites", [] { return list_suites(); });
  m.def(
      "run_suite",
      [](const std::string& name, const std::map<std::string, std::string>& overrides, bool timing) {
        SuiteConfig cfg;
        for (const auto& [k, v] : overrides) cfg.set(k, v);
        cfg.timing = timing;
        SuiteReport r;
        {
          py::gil_scoped_release release;
          r = run_suite(name, cfg);
        }
        return json_loads(to_json(r));
      },
      py::arg("name"), py::arg("overrides") = std::map<std::string, std::string>{}, py::arg("timing") = true,
      "Run a named suite and return its report as a dict.");
}
