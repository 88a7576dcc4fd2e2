// Python bindings. Structured values cross the boundary as JSON text; the
// package __init__ turns them into plain dicts and lists.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "galois/acceptance.hpp"
#include "galois/errors.hpp"
#include "galois/families.hpp"
#include "galois/json_io.hpp"

namespace py = pybind11;
using namespace galois;
using io::Json;

namespace {

LinearSystem system_or_complete(const std::string& system, int degree) {
  if (!system.empty()) {
    LinearSystem v = io::linear_system_from_json(Json::parse(system));
    if (degree > 0 && degree != v.degree()) throw InputError("degree disagrees with the system");
    return v;
  }
  if (degree < 1) throw InputError("degree must be at least 1");
  return LinearSystem::complete(degree);
}

Json parse(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InputError("malformed JSON");
  return j;
}

std::string families(int degree, const std::string& system, int samples, std::uint64_t seed) {
  Json arr = Json::array();
  for (const auto& r : enumerate_families(system_or_complete(system, degree), {samples, seed}))
    arr.push_back(io::to_json(r));
  return arr.dump();
}

std::string galois_space_json(const std::string& group, int degree, const std::string& system) {
  const GroupSpec spec = io::group_spec_from_json(parse(group));
  Json arr = Json::array();
  for (const auto& s : galois_space(conjugated_pair(spec), system_or_complete(system, degree)))
    arr.push_back(io::to_json(s));
  return arr.dump();
}

std::string center(const std::string& group, const std::string& section, int degree,
                   const std::string& system) {
  const GroupSpec spec = io::group_spec_from_json(parse(group));
  const BinaryForm s = io::form_from_json(parse(section));
  if (degree < 1 && system.empty()) degree = s.degree() + spec.order();
  const ProjectionCenter c = family_sample(spec, s, system_or_complete(system, degree));
  return Json{{"center", io::to_json(c)}, {"plucker", io::to_json(plucker(c))}}.dump();
}

std::string verify(const std::string& center_json, const std::string& system, double tol_accept,
                   double tol_dedupe, std::uint64_t seed) {
  const ProjectionCenter c = io::center_from_json(parse(center_json));
  const OracleReport rep =
      is_galois(c, system_or_complete(system, system.empty() ? c.degree() : 0), {tol_accept, tol_dedupe, seed});
  Json j = io::to_json(rep);
  j["warnings"] = rep.warnings;
  return j.dump();
}

std::string selftest(std::uint64_t seed, int samples) {
  AcceptanceConfig cfg;
  cfg.seed = seed;
  cfg.samples = samples;
  Json arr = Json::array();
  for (const auto& r : run_acceptance(cfg))
    arr.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail},
                   {"seconds", r.seconds}});
  return arr.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Galois centers of projections of rational normal curves";
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ComputationError>(m, "ComputationError", PyExc_RuntimeError);

  m.def("families", &families, py::arg("degree") = 0, py::arg("system") = "", py::arg("samples") = 50,
        py::arg("seed") = 0);
  m.def("galois_space", &galois_space_json, py::arg("group"), py::arg("degree") = 0,
        py::arg("system") = "");
  m.def("center", &center, py::arg("group"), py::arg("section"), py::arg("degree") = 0,
        py::arg("system") = "");
  m.def("verify", &verify, py::arg("center"), py::arg("system") = "", py::arg("tol_accept") = 1e-8,
        py::arg("tol_dedupe") = 1e-6, py::arg("seed") = 0);
  m.def("selftest", &selftest, py::arg("seed") = 0, py::arg("samples") = 50);
}
