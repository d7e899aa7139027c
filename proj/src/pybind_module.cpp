// Python bindings. The API is JSON-string in / JSON-string out, mirroring
// the CLI file formats, so the schemas live in exactly one place.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "azrep/json_io.hpp"
#include "azrep/suites.hpp"

namespace py = pybind11;
using namespace azrep;

namespace {

template <class Fn>
auto with_rep_str(const std::string& s, Fn&& fn) {
  Json j = Json::parse(s);
  return with_field(rep_field_name(j),
                    [&](auto f) { return fn(rep_from_json(j, f)); });
}

std::string barcode_of(const std::string& rep) {
  return with_rep_str(rep, [](const auto& v) {
    return barcode_to_json(decompose(v)).dump();
  });
}

std::string tensor_of(const std::string& a, const std::string& b) {
  Json ja = Json::parse(a), jb = Json::parse(b);
  if (rep_field_name(ja) != rep_field_name(jb))
    throw std::invalid_argument("tensor: operands over different fields");
  return with_field(rep_field_name(ja), [&](auto f) {
    return rep_to_json(tensor(rep_from_json(ja, f), rep_from_json(jb, f)))
        .dump();
  });
}

std::vector<int> support_of(const std::string& rep) {
  return with_rep_str(rep, [](const auto& v) { return support(v).elements(); });
}

bool member_of(const std::string& rep, int point) {
  return with_rep_str(
      rep, [&](const auto& v) { return membership(v, PointTensorIdeal{point}); });
}

std::string witness_of(const std::string& rep) {
  return with_rep_str(rep, [](const auto& v) {
    auto ch = full_witness(v.window, v);
    std::string err;
    bool ok = verify_witness(ch, &err);
    Json j = witness_to_json(ch);
    j["verified"] = ok;
    if (!ok) j["error"] = err;
    return j.dump();
  });
}

std::string certify_str(const std::string& cert) {
  auto verdict = check_derivation(cert_from_json(Json::parse(cert)));
  Json j{{"accepted", verdict.ok}};
  if (!verdict.ok) {
    j["step"] = verdict.step;
    j["reason"] = verdict.reason;
  }
  return j.dump();
}

std::string verify_lemmas(std::uint64_t seed, int scale) {
  auto results = run_all_suites(seed, std::max(1, scale));
  bool all = true;
  Json suites = Json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    suites.push_back(suite_result_to_json(r));
  }
  return Json{{"seed", seed}, {"all_passed", all}, {"suites", suites}}.dump();
}

std::string interval_rep_str(int lo, int hi, const std::string& orientation,
                             const std::vector<int>& vertices,
                             const std::string& field) {
  QuiverWindow w(lo, hi, orientation);
  VertexSet s(lo, hi);
  for (int v : vertices) s.insert(v);
  return with_field(field, [&](auto f) {
    return rep_to_json(interval_rep(w, s, f)).dump();
  });
}

}  // namespace

PYBIND11_MODULE(_azrep, m) {
  m.doc() = "prime tensor ideals of pointwise finite-dimensional zigzag "
            "representations";
  m.def("barcode", &barcode_of, py::arg("rep_json"),
        "interval decomposition of a representation (JSON in, JSON out)");
  m.def("tensor", &tensor_of, py::arg("a_json"), py::arg("b_json"));
  m.def("support", &support_of, py::arg("rep_json"));
  m.def("member", &member_of, py::arg("rep_json"), py::arg("point"),
        "membership in the point tensor ideal M_point");
  m.def("witness", &witness_of, py::arg("rep_json"),
        "membership witness chain for the proper-support seed");
  m.def("certify", &certify_str, py::arg("cert_json"),
        "check a derivation certificate for boundedness");
  m.def("verify_lemmas", &verify_lemmas, py::arg("seed") = 0,
        py::arg("scale") = 1, "run every property suite");
  m.def("interval_rep", &interval_rep_str, py::arg("lo"), py::arg("hi"),
        py::arg("orientation"), py::arg("vertices"), py::arg("field") = "gf2",
        "build K_S as a representation JSON string");
}
