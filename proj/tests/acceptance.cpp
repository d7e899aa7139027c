// Acceptance gate: one line per criterion, nonzero exit on any failure.
// argv[1] is the CLI binary (used by the determinism criterion).

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include "azrep/suites.hpp"

using namespace azrep;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool ok, double seconds,
            const std::string& detail = "") {
  std::printf("%s  criterion %d: %s (%.1fs)%s\n", ok ? "PASS" : "FAIL", idx,
              name.c_str(), seconds,
              ok || detail.empty() ? "" : ("  " + detail).c_str());
  if (!ok) ++failures;
}

template <class Fn>
void timed(int idx, const std::string& name, double budget_s, Fn&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteResult r = fn();
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            t0)
                  .count();
  bool ok = r.passed && (budget_s <= 0 || dt < budget_s);
  std::string detail = r.detail;
  if (r.passed && budget_s > 0 && dt >= budget_s)
    detail = "over time budget of " + std::to_string(budget_s) + "s";
  report(idx, name, ok, dt, detail);
}

std::string run_cli(const std::string& cmd) {
  std::array<char, 4096> buf;
  std::string out;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) return "<popen failed>";
  while (fgets(buf.data(), buf.size(), pipe.get())) out += buf.data();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "";

  timed(1, "barcode oracle, 1000 planted instances", 60.0,
        [] { return suites::barcode_oracle_suite(101, 1000); });

  timed(2, "kernel/cokernel exactness, 500 morphisms per field", 0,
        [] { return suites::exactness_suite(102, 500); });

  timed(3, "Boolean prime ideals, exhaustive over 256 families", 10.0,
        [] { return suites::boolean_suite(); });

  timed(4, "phi/psi correspondence on all windows up to size 8", 0,
        [] { return suites::correspondence_suite(104, 200); });

  timed(5, "prime tensor-ideal axioms, 300 checks per point ideal", 0,
        [] { return suites::prime_axiom_suite(105, 300); });

  timed(6, "spectrum topology, exhaustive on small windows", 0,
        [] { return suites::topology_suite(106); });

  timed(7, "witness chains, 200 random instances", 0,
        [] { return suites::witness_suite(107, 200); });

  timed(8, "linear-quiver symbolic suite and certificates", 0, [] {
    SuiteResult all{"symbolic"};
    for (auto r : {suites::symbolic_hom_suite(),
                   suites::containment_suite(108, 300),
                   suites::bounded_extension_suite(109, 500),
                   suites::symbolic_tensor_suite(110, 100),
                   suites::certificate_suite()}) {
      all.checks += r.checks;
      all.failures += r.failures;
      if (!r.passed) all.fail(r.name + ": " + r.detail);
    }
    return all;
  });

  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    if (cli.empty()) {
      detail = "CLI path not provided";
    } else {
      auto a = run_cli(cli + " --json verify-lemmas --seed 7");
      auto b = run_cli(cli + " --json verify-lemmas --seed 7");
      ok = !a.empty() && a == b;
      if (!ok) detail = "verify-lemmas outputs differ between runs";
    }
    double dt = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    report(9, "determinism: verify-lemmas --seed 7 is byte-identical", ok, dt,
           detail);
  }

  if (failures) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
