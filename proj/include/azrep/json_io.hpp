#pragma once

#include <string>

#include <json.hpp>

#include "azrep/barcode.hpp"
#include "azrep/rep.hpp"
#include "azrep/symbolic.hpp"
#include "azrep/witness.hpp"

namespace azrep {

using Json = nlohmann::ordered_json;

// Field names: "gf2", "gf5", ... (any gfN with N prime <= 251), "rational".
template <class Fn>
auto with_field(const std::string& name, Fn&& fn) {
  if (name == "rational") return fn(QQ{});
  if (name.size() > 2 && name.substr(0, 2) == "gf")
    return fn(GF(std::stoi(name.substr(2))));
  throw std::invalid_argument("unknown field: " + name);
}

template <class F>
Json matrix_to_json(const Matrix<F>& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.field().str(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class F>
Matrix<F> matrix_from_json(const Json& j, F f, int rows, int cols) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    throw std::invalid_argument("matrix: wrong row count");
  Matrix<F> m(f, rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != cols)
      throw std::invalid_argument("matrix: wrong column count");
    for (int c = 0; c < cols; ++c)
      m.at(i, c) = f.parse(j[i][c].template get<std::string>());
  }
  return m;
}

inline Json window_to_json(const QuiverWindow& w) {
  return Json{{"lo", w.lo}, {"hi", w.hi}, {"orientation", w.orientation}};
}

inline QuiverWindow window_from_json(const Json& j) {
  return QuiverWindow(j.at("lo").get<int>(), j.at("hi").get<int>(),
                      j.at("orientation").get<std::string>());
}

template <class F>
Json rep_to_json(const Representation<F>& v) {
  Json j;
  j["window"] = window_to_json(v.window);
  j["field"] = v.field.name();
  j["dims"] = v.dims;
  Json maps = Json::array();
  for (const auto& m : v.maps) maps.push_back(matrix_to_json(m));
  j["maps"] = maps;
  return j;
}

template <class F>
Representation<F> rep_from_json(const Json& j, F f) {
  Representation<F> v{window_from_json(j.at("window")), f, {}, {}};
  v.dims = j.at("dims").get<std::vector<int>>();
  if (static_cast<int>(v.dims.size()) != v.window.size())
    throw std::invalid_argument("rep: dims size mismatch");
  const auto& maps = j.at("maps");
  if (static_cast<int>(maps.size()) != v.window.num_arrows())
    throw std::invalid_argument("rep: maps size mismatch");
  for (int k = 0; k < v.window.num_arrows(); ++k)
    v.maps.push_back(matrix_from_json(maps[k], f,
                                      v.dims[v.window.arrow_target(k) - v.window.lo],
                                      v.dims[v.window.arrow_source(k) - v.window.lo]));
  v.validate();
  return v;
}

inline std::string rep_field_name(const Json& j) {
  return j.at("field").get<std::string>();
}

inline Json barcode_to_json(const Barcode& bc) {
  Json bars = Json::array();
  for (auto& [iv, m] : bc.bars)
    bars.push_back(Json{{"a", iv.a}, {"b", iv.b}, {"mult", m}});
  return Json{{"bars", bars}};
}

inline Barcode barcode_from_json(const Json& j) {
  Barcode bc;
  for (const auto& b : j.at("bars"))
    bc.add({b.at("a").get<int>(), b.at("b").get<int>()},
           b.value("mult", 1));
  return bc;
}

// Extended endpoints serialize as numbers or the strings "-inf" / "inf".
inline Json ext_endpoint_to_json(const std::optional<int>& e, bool lower) {
  if (e) return *e;
  return lower ? "-inf" : "inf";
}

inline std::optional<int> ext_endpoint_from_json(const Json& j) {
  if (j.is_string()) return std::nullopt;
  return j.get<int>();
}

inline Json symbolic_to_json(const SymbolicBarcode& sb) {
  Json bars = Json::array();
  for (const auto& b : sb.bars)
    bars.push_back(Json{{"a", ext_endpoint_to_json(b.a, true)},
                        {"b", ext_endpoint_to_json(b.b, false)}});
  Json dust = Json::array();
  for (const auto& d : sb.dust) {
    Json dj{{"offset", d.offset}, {"period", d.period}};
    if (d.lo) dj["lo"] = *d.lo;
    if (d.hi) dj["hi"] = *d.hi;
    dust.push_back(std::move(dj));
  }
  Json j{{"bars", bars}};
  if (!dust.empty()) j["dust"] = dust;
  return j;
}

inline SymbolicBarcode symbolic_from_json(const Json& j) {
  SymbolicBarcode sb;
  for (const auto& b : j.at("bars"))
    sb.bars.push_back(ExtendedInterval(ext_endpoint_from_json(b.at("a")),
                                       ext_endpoint_from_json(b.at("b"))));
  if (j.contains("dust"))
    for (const auto& d : j["dust"]) {
      Dust du(d.at("offset").get<int>(), d.at("period").get<int>());
      if (d.contains("lo")) du.lo = d["lo"].get<int>();
      if (d.contains("hi")) du.hi = d["hi"].get<int>();
      sb.dust.push_back(du);
    }
  return sb;
}

inline std::string cert_op_name(CertOp op) {
  switch (op) {
    case CertOp::Tensor: return "tensor";
    case CertOp::Ext: return "ext";
    case CertOp::Ker: return "ker";
    case CertOp::Coker: return "coker";
  }
  throw std::logic_error("bad op");
}

inline CertOp cert_op_from_name(const std::string& s) {
  if (s == "tensor") return CertOp::Tensor;
  if (s == "ext") return CertOp::Ext;
  if (s == "ker") return CertOp::Ker;
  if (s == "coker") return CertOp::Coker;
  throw std::invalid_argument("unknown certificate op: " + s);
}

inline Json cert_to_json(const DerivationCertificate& c) {
  Json seeds = Json::array();
  for (const auto& s : c.seeds) seeds.push_back(symbolic_to_json(s));
  Json steps = Json::array();
  for (const auto& st : c.steps)
    steps.push_back(Json{{"op", cert_op_name(st.op)},
                         {"args", st.args},
                         {"claim", symbolic_to_json(st.claim)}});
  return Json{{"seeds", seeds}, {"steps", steps}};
}

inline DerivationCertificate cert_from_json(const Json& j) {
  DerivationCertificate c;
  for (const auto& s : j.at("seeds")) c.seeds.push_back(symbolic_from_json(s));
  for (const auto& st : j.at("steps"))
    c.steps.push_back(CertStep{cert_op_from_name(st.at("op").get<std::string>()),
                               st.at("args").get<std::vector<int>>(),
                               symbolic_from_json(st.at("claim"))});
  return c;
}

// Witness chains serialize one way (for the CLI and logs); the verifier
// works on the in-memory form.
template <class F>
Json witness_step_to_json(const WitnessStep<F>& s) {
  Json j;
  j["dims"] = s.object.dims;
  j["note"] = s.note;
  std::visit(
      [&](const auto& just) {
        using T = std::decay_t<decltype(just)>;
        if constexpr (std::is_same_v<T, JSeed<F>>) {
          j["justification"] = Json{{"tag", "seed"}, {"note", just.note}};
        } else if constexpr (std::is_same_v<T, JTensorAbsorb<F>>) {
          j["justification"] =
              Json{{"tag", "tensor"}, {"member", just.member},
                   {"factor_dims", just.factor.dims}};
        } else if constexpr (std::is_same_v<T, JExtension<F>>) {
          j["justification"] =
              Json{{"tag", "extension"}, {"sub", just.sub}, {"quot", just.quot}};
        } else if constexpr (std::is_same_v<T, JKernelOf<F>>) {
          j["justification"] =
              Json{{"tag", "kernel"}, {"source", just.source},
                   {"target", just.target}};
        } else if constexpr (std::is_same_v<T, JCokernelOf<F>>) {
          j["justification"] =
              Json{{"tag", "cokernel"}, {"source", just.source},
                   {"target", just.target}};
        } else if constexpr (std::is_same_v<T, JIsoReplace<F>>) {
          j["justification"] = Json{{"tag", "iso"}, {"member", just.member}};
        }
      },
      s.why);
  return j;
}

template <class F>
Json witness_to_json(const WitnessChain<F>& ch) {
  auto steps = [&](const std::vector<WitnessStep<F>>& v) {
    Json a = Json::array();
    for (const auto& s : v) a.push_back(witness_step_to_json(s));
    return a;
  };
  Json j;
  j["trunk"] = steps(ch.trunk);
  j["case_split_member"] = ch.case_split_member;
  j["branch_b"] = steps(ch.branch_b);
  j["branch_d"] = steps(ch.branch_d);
  return j;
}

}  // namespace azrep
