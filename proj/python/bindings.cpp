// Thin Python layer over the library. Structured values cross as JSON text.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polyak/error.hpp"
#include "polyak/gauss_code.hpp"
#include "polyak/io.hpp"
#include "polyak/verifier.hpp"

namespace py = pybind11;
using namespace polyak;

namespace {

Certificate run_claim(const std::string& claim, int order, const std::string& skeleton, const std::string& flavor) {
  Skeleton skel = skeleton_from_string(skeleton);
  if (claim == "theorem1") return verify_theorem1(order, skel);
  if (claim == "vanishing") return verify_vanishing(order, skel);
  if (claim == "caterpillar") return verify_caterpillar(order, skel);
  if (claim == "average") return verify_average(order, skel);
  if (claim == "membership") return verify_membership_lemma(order, flavor_from_string(flavor), skel);
  throw py::value_error("unknown claim: " + claim);
}

}  // namespace

PYBIND11_MODULE(_polyak_lab, m) {
  static py::exception<Error> base(m, "PolyakError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(base.ptr(), (std::string(e.code()) + ": " + e.what()).c_str());
    }
  });

  m.def("version", &tool_version);

  m.def("normalize_gauss_code", [](const std::string& code) { return emit_gauss_code(parse_gauss_code(code)); },
        py::arg("code"));

  m.def("diagram_key", [](const std::string& code) { return key_of(parse_gauss_code(code), Flavor::Gauss).text(); },
        py::arg("code"));

  m.def("gauss_code_json", [](const std::string& code) { return dump_json(to_json(parse_gauss_code(code))); },
        py::arg("code"));

  m.def(
      "enumerate",
      [](const std::string& skeleton, const std::string& flavor, int n, bool up_to) {
        std::vector<std::string> out;
        for (const auto& k : enumerate_diagrams(skeleton_from_string(skeleton), flavor_from_string(flavor), n,
                                                up_to ? CountMode::UpTo : CountMode::Exactly))
          out.push_back(k.text());
        return out;
      },
      py::arg("skeleton"), py::arg("flavor"), py::arg("n"), py::arg("up_to") = false);

  m.def(
      "invariant_space",
      [](int order, const std::string& skeleton, const std::string& profile) {
        Json out = Json::array();
        for (const auto& f : invariant_space(order, skeleton_from_string(skeleton), profile_from_string(profile)))
          out.push_back(to_json(f));
        return dump_json(out);
      },
      py::arg("order"), py::arg("skeleton"), py::arg("profile") = "gpv");

  m.def(
      "evaluate",
      [](const std::string& functional_json, const std::string& code) {
        InvariantFunctional f = functional_from_json(parse_json(functional_json));
        return evaluate(f, parse_gauss_code(code)).get_str();
      },
      py::arg("functional"), py::arg("code"));

  m.def(
      "verify",
      [](const std::string& claim, int order, const std::string& skeleton, const std::string& flavor) {
        Certificate c;
        {
          py::gil_scoped_release release;
          c = run_claim(claim, order, skeleton, flavor);
        }
        return dump_json(to_json(c, false));
      },
      py::arg("claim"), py::arg("order"), py::arg("skeleton") = "circle", py::arg("flavor") = "arrow-signed");
}
