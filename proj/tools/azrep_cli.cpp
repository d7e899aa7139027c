#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "azrep/json_io.hpp"
#include "azrep/suites.hpp"

using namespace azrep;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitVerification = 2;

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

struct WindowSpec {
  std::string range;  // "lo..hi"
  std::string orientation;

  QuiverWindow parse() const {
    auto dots = range.find("..");
    if (dots == std::string::npos)
      throw std::runtime_error("--window expects lo..hi");
    int lo = std::stoi(range.substr(0, dots));
    int hi = std::stoi(range.substr(dots + 2));
    return QuiverWindow(lo, hi, orientation);
  }
};

// Dispatch on the "field" key of a representation file.
template <class Fn>
int with_rep_file(const std::string& path, Fn&& fn) {
  Json j = load_json(path);
  return with_field(rep_field_name(j), [&](auto f) {
    auto v = rep_from_json(j, f);
    return fn(v);
  });
}

int cmd_barcode(const std::string& path, bool json) {
  return with_rep_file(path, [&](const auto& v) {
    auto bc = decompose(v);
    if (json)
      std::cout << barcode_to_json(bc).dump(2) << "\n";
    else
      std::cout << ascii_bars(bc, v.window.lo);
    return kExitOk;
  });
}

int cmd_tensor(const std::string& pa, const std::string& pb) {
  Json ja = load_json(pa), jb = load_json(pb);
  if (rep_field_name(ja) != rep_field_name(jb))
    throw std::runtime_error("tensor: operands over different fields");
  return with_field(rep_field_name(ja), [&](auto f) {
    auto a = rep_from_json(ja, f);
    auto b = rep_from_json(jb, f);
    std::cout << rep_to_json(tensor(a, b)).dump(2) << "\n";
    return kExitOk;
  });
}

int cmd_support(const std::string& path, bool json) {
  return with_rep_file(path, [&](const auto& v) {
    auto s = support(v);
    if (json) {
      std::cout << Json(s.elements()).dump() << "\n";
    } else {
      for (int x : s.elements()) std::cout << x << " ";
      std::cout << "\n";
    }
    return kExitOk;
  });
}

int cmd_member(const std::string& path, int point) {
  return with_rep_file(path, [&](const auto& v) {
    bool in = membership(v, PointTensorIdeal{point});
    std::cout << (in ? "MEMBER" : "NOT MEMBER") << "\n";
    return kExitOk;
  });
}

int cmd_spectrum(const WindowSpec& ws, bool json) {
  QuiverWindow w = ws.parse();
  auto model = SpcFiniteModel::of(w);
  bool checked = w.size() <= 8;
  bool homeo = !checked || homeomorphism_check(model, GF(2));
  bool hausdorff = !checked || hausdorff_check(model, GF(2));
  if (json) {
    Json pts = Json::array();
    for (auto m : model.points) pts.push_back(m.a);
    Json j{{"window", window_to_json(w)},
           {"points", pts},
           {"verified", checked},
           {"homeomorphism", homeo},
           {"hausdorff", hausdorff}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "Spc points (one prime tensor ideal per vertex):\n";
    for (auto m : model.points) std::cout << "  M_" << m.a << "\n";
    if (checked)
      std::cout << "homeomorphism with the Boolean spectrum: "
                << (homeo ? "verified" : "FAILED") << "\n"
                << "Hausdorff separation: "
                << (hausdorff ? "verified" : "FAILED") << "\n";
  }
  return (homeo && hausdorff) ? kExitOk : kExitVerification;
}

int cmd_witness(const WindowSpec& ws, const std::string& rep_path, bool json) {
  QuiverWindow w = ws.parse();
  return with_rep_file(rep_path, [&](const auto& v) {
    if (v.window != w)
      throw std::runtime_error("witness: representation window mismatch");
    auto ch = full_witness(w, v);
    std::string err;
    bool ok = verify_witness(ch, &err);
    if (json) {
      Json j = witness_to_json(ch);
      j["verified"] = ok;
      if (!ok) j["error"] = err;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "witness chain: " << ch.trunk.size() << " trunk steps, "
                << ch.branch_b.size() << " + " << ch.branch_d.size()
                << " branch steps\n"
                << (ok ? "VERIFIED: both case-split branches reach K_window"
                       : "VERIFICATION FAILED: " + err)
                << "\n";
    }
    return ok ? kExitOk : kExitVerification;
  });
}

int cmd_certify(const std::string& path, bool json) {
  auto cert = cert_from_json(load_json(path));
  auto v = check_derivation(cert);
  if (json) {
    Json j{{"accepted", v.ok}};
    if (!v.ok) {
      j["step"] = v.step;
      j["reason"] = v.reason;
    }
    std::cout << j.dump(2) << "\n";
  } else if (v.ok) {
    std::cout << "ACCEPTED: all steps bounded\n";
  } else {
    std::cout << "REJECTED at step " << v.step << ": " << v.reason << "\n";
  }
  return v.ok ? kExitOk : kExitVerification;
}

int cmd_verify_lemmas(std::uint64_t seed, int trials, bool json) {
  auto results = run_all_suites(seed, std::max(1, trials));
  bool all = true;
  Json report = Json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    report.push_back(suite_result_to_json(r));
    if (!json)
      std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "  ("
                << r.checks << " checks)"
                << (r.passed ? "" : "  " + r.detail) << "\n";
  }
  if (json)
    std::cout << Json{{"seed", seed}, {"scale", std::max(1, trials)},
                      {"all_passed", all}, {"suites", report}}
                     .dump(2)
              << "\n";
  return all ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"prime tensor ideals of pointwise finite-dimensional zigzag "
               "representations: barcodes, spectra, witness chains"};
  app.require_subcommand(1);

  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  std::string rep_path, rep_path_b, cert_path;
  int point = 0;
  WindowSpec ws;
  std::uint64_t seed = 0;
  int trials = 1;

  auto* barcode = app.add_subcommand("barcode", "interval decomposition");
  barcode->add_option("rep", rep_path, "representation JSON file")->required();

  auto* tens = app.add_subcommand("tensor", "pointwise tensor product");
  tens->add_option("a", rep_path, "left operand")->required();
  tens->add_option("b", rep_path_b, "right operand")->required();

  auto* supp = app.add_subcommand("support", "support vertices");
  supp->add_option("rep", rep_path, "representation JSON file")->required();

  auto* member = app.add_subcommand("member", "membership in a point ideal");
  member->add_option("rep", rep_path, "representation JSON file")->required();
  member->add_option("--point", point, "vertex a of M_a")->required();

  auto* spectrum = app.add_subcommand("spectrum", "points of the spectrum");
  spectrum->add_option("--window", ws.range, "lo..hi")->required();
  spectrum->add_option("--orientation", ws.orientation, "R/L word")->required();

  auto* witness = app.add_subcommand("witness", "membership witness chain");
  witness->add_option("--window", ws.range, "lo..hi")->required();
  witness->add_option("--orientation", ws.orientation, "R/L word")->required();
  witness->add_option("--rep", rep_path, "seed representation")->required();

  auto* certify = app.add_subcommand("certify", "check a derivation certificate");
  certify->add_option("cert", cert_path, "certificate JSON file")->required();

  auto* verify = app.add_subcommand("verify-lemmas", "run every property suite");
  verify->add_option("--seed", seed, "base random seed");
  verify->add_option("--trials", trials, "trial-count scale factor");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*barcode) return cmd_barcode(rep_path, json);
    if (*tens) return cmd_tensor(rep_path, rep_path_b);
    if (*supp) return cmd_support(rep_path, json);
    if (*member) return cmd_member(rep_path, point);
    if (*spectrum) return cmd_spectrum(ws, json);
    if (*witness) return cmd_witness(ws, rep_path, json);
    if (*certify) return cmd_certify(cert_path, json);
    if (*verify) return cmd_verify_lemmas(seed, trials, json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
