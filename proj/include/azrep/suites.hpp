#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "azrep/barcode.hpp"
#include "azrep/boolean.hpp"
#include "azrep/gen.hpp"
#include "azrep/json_io.hpp"
#include "azrep/spectrum.hpp"
#include "azrep/symbolic.hpp"
#include "azrep/witness.hpp"

namespace azrep {

// One property suite's outcome. `checks` counts individual verifications;
// any failure records the first offending case in `detail`.
struct SuiteResult {
  std::string name;
  bool passed = true;
  long checks = 0;
  long failures = 0;
  std::string detail;

  void fail(const std::string& d) {
    ++failures;
    if (passed) detail = d;
    passed = false;
  }
  void check(bool ok, const std::string& d) {
    ++checks;
    if (!ok) fail(d);
  }
};

inline Json suite_result_to_json(const SuiteResult& r) {
  return Json{{"suite", r.name},
              {"passed", r.passed},
              {"checks", r.checks},
              {"failures", r.failures},
              {"detail", r.detail}};
}

namespace suites {

// --- 1. barcode round trip -----------------------------------------------

template <class F>
void barcode_roundtrip_one(SuiteResult& r, Rng& g, F f) {
  int size = rand_int(g, 2, 12);
  int lo = rand_int(g, -4, 4);
  QuiverWindow w(lo, lo + size - 1, random_orientation(g, size - 1));
  Barcode planted = random_barcode(g, w, 5, 3);
  auto v = base_change(assemble(w, planted, f), g());
  Barcode got = decompose(v);
  r.check(got == planted, "planted barcode not recovered on window " +
                              std::to_string(lo) + ".." +
                              std::to_string(w.hi) + " orient " +
                              w.orientation + " field " + f.name());
}

inline SuiteResult barcode_oracle_suite(std::uint64_t seed, int trials) {
  SuiteResult r{"barcode_oracle"};
  Rng g(seed);
  for (int i = 0; i < trials; ++i) {
    switch (i % 3) {
      case 0: barcode_roundtrip_one(r, g, GF(2)); break;
      case 1: barcode_roundtrip_one(r, g, GF(5)); break;
      case 2: barcode_roundtrip_one(r, g, QQ{}); break;
    }
  }
  return r;
}

// --- 2. kernel/cokernel exactness ----------------------------------------

template <class F>
void exactness_trials(SuiteResult& r, Rng& g, F f, int trials) {
  for (int i = 0; i < trials; ++i) {
    int size = rand_int(g, 2, 6);
    int lo = rand_int(g, -2, 2);
    QuiverWindow w(lo, lo + size - 1, random_orientation(g, size - 1));
    auto a = random_rep(g, w, f, 4, 2);
    auto b = random_rep(g, w, f, 4, 2);
    auto m = random_morphism(g, a, b);
    auto [ker, incl] = kernel(m);
    auto [cok, proj] = cokernel(m);
    bool ok = incl.is_valid() && is_mono(incl) && proj.is_valid() &&
              is_epi(proj);
    // 0 -> ker -> a -> b -> cok -> 0, rank identities per vertex
    for (int v = w.lo; v <= w.hi && ok; ++v) {
      int rk = rank(m.components[v - w.lo]);
      if (ker.dim_at(v) != a.dim_at(v) - rk) ok = false;
      if (cok.dim_at(v) != b.dim_at(v) - rk) ok = false;
      if (!(m.components[v - w.lo] * incl.components[v - w.lo]).is_zero())
        ok = false;
      if (!(proj.components[v - w.lo] * m.components[v - w.lo]).is_zero())
        ok = false;
      if (ker.dim_at(v) - a.dim_at(v) + b.dim_at(v) - cok.dim_at(v) != 0)
        ok = false;
    }
    r.check(ok, "exactness failed, field " + f.name() + " trial " +
                    std::to_string(i));
  }
}

inline SuiteResult exactness_suite(std::uint64_t seed, int trials_per_field) {
  SuiteResult r{"exactness"};
  Rng g(seed);
  exactness_trials(r, g, GF(2), trials_per_field);
  exactness_trials(r, g, GF(5), trials_per_field);
  exactness_trials(r, g, QQ{}, trials_per_field);
  return r;
}

// --- 3. Boolean ground truth ---------------------------------------------

inline SuiteResult boolean_suite() {
  SuiteResult r{"boolean_ground_truth"};
  int lo = 0, hi = 2;
  auto primes = enumerate_primes(lo, hi, PrimeEnumerationMode::Exhaustive);
  r.check(primes.size() == 3, "expected exactly 3 prime ideals, got " +
                                  std::to_string(primes.size()));
  auto principal = enumerate_primes(lo, hi, PrimeEnumerationMode::Principal);
  for (auto& p : primes) {
    bool is_point = false;
    for (auto& q : principal)
      if (p == q) is_point = true;
    r.check(is_point, "exhaustive prime is not a point ideal");
    r.check(is_maximal_ideal(p), "prime ideal is not maximal");
  }
  for (auto& q : principal) {
    bool found = false;
    for (auto& p : primes)
      if (p == q) found = true;
    r.check(found, "principal-mode prime missed by exhaustive scan");
  }
  // ring sanity: x*x = x, x+x = 0 over the whole universe's power set
  for (std::uint64_t b = 0; b < 8; ++b) {
    FiniteSubset x = FiniteSubset(lo, hi).with(b);
    r.check(ring_mul(x, x) == x, "x*x != x");
    r.check(ring_add(x, x).empty(), "x+x != 0");
  }
  return r;
}

// --- 4. phi/psi correspondence -------------------------------------------

template <class F>
void correspondence_window(SuiteResult& r, Rng& g, const QuiverWindow& w, F f,
                           int reps) {
  auto model = SpcFiniteModel::of(w);
  for (auto m : model.points) {
    // phi then back: the family is the point ideal of m's vertex
    auto fam = phi(w, m);
    r.check(psi(prime_point_of(fam)) == m, "psi(phi(M)) != M");
    r.check(fam == point_ideal(w.lo, w.hi, m.a), "phi(M_a) != P_a");
  }
  for (int i = 0; i < reps; ++i) {
    auto v = random_rep(g, w, f, 3, 2);
    auto sv = support(v);
    for (auto m : model.points) {
      bool member = membership(v, m);
      bool in_family = phi(w, m).contains(sv);
      r.check(member == in_family,
              "membership(V, psi(P_a)) mismatch with supp(V) in P_a");
    }
  }
}

inline SuiteResult correspondence_suite(std::uint64_t seed, int reps_per_window) {
  SuiteResult r{"correspondence"};
  Rng g(seed);
  for (int size = 1; size <= 8; ++size) {
    int nwords = 1 << (size - 1);
    for (int bits = 0; bits < nwords; ++bits) {
      std::string orient;
      for (int k = 0; k < size - 1; ++k) orient += ((bits >> k) & 1) ? 'R' : 'L';
      QuiverWindow w(0, size - 1, orient);
      correspondence_window(r, g, w, GF(2), reps_per_window);
    }
  }
  return r;
}

// --- 5. prime tensor-ideal axioms ----------------------------------------

template <class F>
Representation<F> random_member(Rng& g, const QuiverWindow& w, F f, int avoid) {
  // random rep with no bar covering `avoid`
  Barcode bc = random_barcode(g, w, 4, 2);
  Barcode kept;
  for (auto& [iv, m] : bc.bars)
    if (!(iv.a <= avoid && avoid <= iv.b)) kept.add(iv, m);
  return base_change(assemble(w, kept, f), g());
}

template <class F>
void prime_axiom_point(SuiteResult& r, Rng& g, const QuiverWindow& w, F f,
                       PointTensorIdeal m, int checks) {
  for (int i = 0; i < checks; ++i) {
    switch (i % 5) {
      case 0: {  // absorb: V in M, W arbitrary -> V (x) W in M
        auto v = random_member(g, w, f, m.a);
        auto x = random_rep(g, w, f, 3, 2);
        r.check(membership(tensor(v, x), m), "tensor absorption violated");
        break;
      }
      case 1: {  // extension closure
        auto v1 = random_member(g, w, f, m.a);
        auto v2 = random_member(g, w, f, m.a);
        std::vector<Matrix<F>> eps;
        for (int k = 0; k < w.num_arrows(); ++k) {
          Matrix<F> e(f, v1.dim_at(w.arrow_target(k)),
                      v2.dim_at(w.arrow_source(k)));
          for (int a = 0; a < e.rows(); ++a)
            for (int b = 0; b < e.cols(); ++b)
              e.at(a, b) = f.from_int(rand_int(g, -2, 2));
          eps.push_back(std::move(e));
        }
        r.check(membership(extension(v1, v2, eps).middle, m),
                "extension closure violated");
        break;
      }
      case 2: {  // kernel closure
        auto v = random_member(g, w, f, m.a);
        auto x = random_rep(g, w, f, 3, 2);
        auto fm = random_morphism(g, v, x);
        r.check(membership(kernel(fm).first, m), "kernel closure violated");
        break;
      }
      case 3: {  // cokernel closure
        auto x = random_rep(g, w, f, 3, 2);
        auto v = random_member(g, w, f, m.a);
        auto fm = random_morphism(g, x, v);
        r.check(membership(cokernel(fm).first, m), "cokernel closure violated");
        break;
      }
      case 4: {  // primality of the tensor
        auto x = random_rep(g, w, f, 3, 2);
        auto y = random_rep(g, w, f, 3, 2);
        if (membership(tensor(x, y), m))
          r.check(membership(x, m) || membership(y, m),
                  "primality violated: product in M but neither factor");
        else
          r.check(!membership(x, m) && !membership(y, m),
                  "product not in M though a factor is");
        break;
      }
    }
  }
}

inline SuiteResult prime_axiom_suite(std::uint64_t seed, int checks_per_point) {
  SuiteResult r{"prime_ideal_axioms"};
  Rng g(seed);
  QuiverWindow w(0, 7, random_orientation(g, 7));
  for (int a = w.lo; a <= w.hi; ++a)
    prime_axiom_point(r, g, w, GF(5), PointTensorIdeal{a}, checks_per_point);
  return r;
}

// --- 6. topology of the spectrum -----------------------------------------

template <class F>
void topology_window(SuiteResult& r, Rng& g, const QuiverWindow& w, F f) {
  auto model = SpcFiniteModel::of(w);
  // closed-set identities on random finite families
  for (int t = 0; t < 4; ++t) {
    std::vector<Representation<F>> s1, s2;
    for (int i = rand_int(g, 0, 2); i > 0; --i)
      s1.push_back(interval_rep(w, random_subset(g, w.lo, w.hi), f));
    for (int i = rand_int(g, 0, 2); i > 0; --i)
      s2.push_back(interval_rep(w, random_subset(g, w.lo, w.hi), f));
    auto z1 = zariski_closed(s1, model);
    auto z2 = zariski_closed(s2, model);
    // union of families -> intersection of closed sets
    auto s12 = s1;
    s12.insert(s12.end(), s2.begin(), s2.end());
    ZariskiClosedSet inter;
    for (auto p : z1)
      if (std::find(z2.begin(), z2.end(), p) != z2.end()) inter.push_back(p);
    r.check(zariski_closed(s12, model) == inter,
            "Z(S1 u S2) != Z(S1) n Z(S2)");
    // pairwise direct sums -> union of closed sets
    std::vector<Representation<F>> prods;
    for (auto& a : s1)
      for (auto& b : s2) prods.push_back(direct_sum(a, b));
    ZariskiClosedSet uni = z1;
    for (auto p : z2)
      if (std::find(uni.begin(), uni.end(), p) == uni.end()) uni.push_back(p);
    std::sort(uni.begin(), uni.end());
    auto zp = zariski_closed(prods, model);
    std::sort(zp.begin(), zp.end());
    if (s1.empty() || s2.empty()) {
      // empty family: Z = whole space; the tensor identity is vacuous
    } else {
      r.check(zp == uni, "Z(S1 (+) S2) != Z(S1) u Z(S2)");
    }
  }
  r.check(zariski_closed(std::vector<Representation<F>>{}, model).size() ==
              model.points.size(),
          "Z(empty) is not the whole space");
  // zero lies in every point ideal, so Z of any family containing it is empty
  r.check(zariski_closed(std::vector<Representation<F>>{zero_rep(w, f)}, model)
              .empty(),
          "Z({0}) nonempty");
  r.check(zariski_closed(std::vector<Representation<F>>{unit_rep(w, f)}, model)
                  .size() == model.points.size(),
          "Z({K_window}) is not the whole space");
  for (int t = 0; t < 6; ++t) {
    auto v = random_rep(g, w, f, 3, 2);
    r.check(clopen_check(v, model), "clopen complement formula violated");
  }
  r.check(hausdorff_check(model, f), "points not separated");
  r.check(homeomorphism_check(model, f), "closed-set bijection violated");
}

inline SuiteResult topology_suite(std::uint64_t seed) {
  SuiteResult r{"spectrum_topology"};
  Rng g(seed);
  for (int size = 1; size <= 8; ++size) {
    int nwords = 1 << (size - 1);
    if (size <= 6) {
      for (int bits = 0; bits < nwords; ++bits) {
        std::string orient;
        for (int k = 0; k < size - 1; ++k)
          orient += ((bits >> k) & 1) ? 'R' : 'L';
        topology_window(r, g, QuiverWindow(0, size - 1, orient), GF(2));
      }
    } else {
      // every orientation of the closed sets is support-determined; sample
      for (int t = 0; t < 8; ++t)
        topology_window(
            r, g, QuiverWindow(0, size - 1, random_orientation(g, size - 1)),
            GF(2));
    }
  }
  return r;
}

// --- 7. witness chains ----------------------------------------------------

template <class F>
void witness_trial(SuiteResult& r, Rng& g, F f) {
  int size = rand_int(g, 2, 16);
  int lo = rand_int(g, -4, 4);
  QuiverWindow w(lo, lo + size - 1, random_orientation(g, size - 1));
  auto v = random_rep(g, w, f, 4, 2);
  if (support(v).full()) {
    // drop every bar through one vertex to make the support proper
    int cut = rand_int(g, w.lo, w.hi);
    Barcode bc = decompose(v), kept;
    for (auto& [iv, m] : bc.bars)
      if (!(iv.a <= cut && cut <= iv.b)) kept.add(iv, m);
    v = base_change(assemble(w, kept, f), g());
  }
  auto ch = full_witness(w, v);
  std::string err;
  bool ok = verify_witness(ch, &err);
  r.check(ok, "witness rejected (" + err + ") on window " + w.orientation);
  // saturation fixpoint bound
  auto lab = sinks_and_sources(w);
  auto bdc = bdc_sets(lab);
  for (const auto& start : {bdc.b, bdc.d}) {
    auto tr = saturate_right(start, w);
    r.check(static_cast<int>(tr.layers.size()) <= w.max_path_length(),
            "saturate_right exceeded the path bound");
    auto tl = saturate_left(tr.result, w);
    r.check(static_cast<int>(tl.layers.size()) <= w.max_path_length(),
            "saturate_left exceeded the path bound");
  }
}

inline SuiteResult witness_suite(std::uint64_t seed, int trials) {
  SuiteResult r{"witness_chains"};
  Rng g(seed);
  for (int i = 0; i < trials; ++i) {
    if (i % 3 == 0)
      witness_trial(r, g, QQ{});
    else
      witness_trial(r, g, GF(i % 6 == 1 ? 5 : 2));
  }
  return r;
}

// --- 8. symbolic / unbounded side ----------------------------------------

inline SuiteResult symbolic_hom_suite() {
  SuiteResult r{"hom_dim_linear_vs_bruteforce"};
  for (int n = 1; n <= 8; ++n) {
    QuiverWindow w(0, n - 1, std::string(n - 1, 'R'));
    GF f(2);
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = c; d < n; ++d) {
            auto ki = interval_rep(w, VertexSet::range(0, n - 1, a, b), f);
            auto kj = interval_rep(w, VertexSet::range(0, n - 1, c, d), f);
            int brute = hom_dim(ki, kj);
            int formula = hom_dim_linear(ExtendedInterval::finite(a, b),
                                         ExtendedInterval::finite(c, d));
            r.check(brute == formula,
                    "hom mismatch [" + std::to_string(a) + "," +
                        std::to_string(b) + "] -> [" + std::to_string(c) +
                        "," + std::to_string(d) + "]");
          }
  }
  return r;
}

template <class F>
void containment_trials(SuiteResult& r, Rng& g, F f, int cases) {
  int done = 0;
  while (done < cases) {
    int size = rand_int(g, 2, 10);
    QuiverWindow w(0, size - 1, std::string(size - 1, 'R'));
    auto a = random_rep(g, w, f, 4, 2);
    auto b = random_rep(g, w, f, 4, 2);
    auto m = random_morphism(g, a, b);
    // kernels give monos, cokernels epis: a steady supply of valid cases
    auto incl = kernel(m).second;
    auto proj = cokernel(m).second;
    for (const Morphism<F>* fm : {&incl, &proj}) {
      auto verdict = mono_containment_check(*fm);
      r.check(verdict.ok, "containment lemma violated: " + verdict.detail);
      auto ds = direct_summand_of_tensor_check(*fm);
      r.check(ds.ok, "direct summand of tensor violated: " + ds.detail);
      ++done;
    }
  }
}

inline SuiteResult containment_suite(std::uint64_t seed, int cases) {
  SuiteResult r{"mono_epi_containment"};
  Rng g(seed);
  containment_trials(r, g, GF(5), cases);
  return r;
}

inline SuiteResult bounded_extension_suite(std::uint64_t seed, int trials) {
  SuiteResult r{"bounded_extension"};
  Rng g(seed);
  GF f(5);
  for (int i = 0; i < trials; ++i) {
    int size = rand_int(g, 3, 12);
    QuiverWindow w(0, size - 1, std::string(size - 1, 'R'));
    // bars strictly left of the window's right edge (the proxy infinity)
    auto interior_rep = [&]() {
      Barcode bc;
      for (int j = rand_int(g, 0, 3); j > 0; --j) {
        int x = rand_int(g, 0, size - 2);
        int y = rand_int(g, x, size - 2);
        bc.add({x, y}, rand_int(g, 1, 2));
      }
      return base_change(assemble(w, bc, f), g());
    };
    auto v1 = interior_rep();
    auto v2 = interior_rep();
    std::vector<Matrix<GF>> eps;
    for (int k = 0; k < w.num_arrows(); ++k) {
      Matrix<GF> e(f, v1.dim_at(w.arrow_target(k)),
                   v2.dim_at(w.arrow_source(k)));
      for (int x = 0; x < e.rows(); ++x)
        for (int y = 0; y < e.cols(); ++y)
          e.at(x, y) = f.from_int(rand_int(g, 0, 4));
      eps.push_back(std::move(e));
    }
    auto verdict = bounded_extension_check(v1, v2, eps);
    r.check(verdict.applicable && verdict.ok,
            "bounded extension violated: " + verdict.detail);
  }
  return r;
}

inline SuiteResult symbolic_tensor_suite(std::uint64_t seed, int trials) {
  SuiteResult r{"symbolic_tensor"};
  Rng g(seed);
  // pinned examples
  {
    auto line = SymbolicBarcode::whole_line_bar();
    auto dust = SymbolicBarcode::full_dust();
    r.check(symbolic_tensor(line, dust) == dust, "K_line (x) dust != dust");
    SymbolicBarcode x{{ExtendedInterval::finite(0, 5)}, {}};
    SymbolicBarcode y{{ExtendedInterval::finite(3, 9)}, {}};
    SymbolicBarcode expect{{ExtendedInterval::finite(3, 5)}, {}};
    r.check(symbolic_tensor(x, y) == expect, "[0,5] (x) [3,9] != [3,5]");
    r.check(!is_bounded(line) && is_bounded(dust), "boundedness basics");
  }
  auto random_symbolic = [&](bool force_bounded) {
    SymbolicBarcode s;
    for (int i = rand_int(g, 0, 3); i > 0; --i) {
      std::optional<int> a, b;
      if (force_bounded || rand_int(g, 0, 3)) a = rand_int(g, -10, 10);
      if (force_bounded || rand_int(g, 0, 3)) b = rand_int(g, a ? *a : -10, 15);
      s.bars.push_back(ExtendedInterval(a, b));
    }
    for (int i = rand_int(g, 0, 2); i > 0; --i)
      s.dust.push_back(Dust(rand_int(g, 0, 5), rand_int(g, 1, 4)));
    return s;
  };
  for (int i = 0; i < trials; ++i) {
    auto x = random_symbolic(true);
    auto y = random_symbolic(false);
    r.check(is_bounded(symbolic_tensor(x, y)),
            "bounded (x) anything produced an unbounded bar");
    r.check(is_bounded(symbolic_tensor(y, x)),
            "bounded (x) anything produced an unbounded bar");
  }
  return r;
}

// A ten-step bounded derivation from S = {0, dust} that must be accepted,
// and an adversarial corpus of rejectable certificates.
inline DerivationCertificate accepted_certificate() {
  DerivationCertificate c;
  c.seeds.push_back(SymbolicBarcode::zero());        // 0
  c.seeds.push_back(SymbolicBarcode::full_dust());   // 1: K'_line
  auto bar = [](int a, int b) {
    return SymbolicBarcode{{ExtendedInterval::finite(a, b)}, {}};
  };
  auto point_dust = [](int at) {
    return SymbolicBarcode{{}, {Dust(at, 1, at, at)}};
  };
  c.steps.push_back({CertOp::Tensor, {1}, point_dust(0)});        // 2
  c.steps.push_back({CertOp::Tensor, {1}, point_dust(1)});        // 3
  c.steps.push_back({CertOp::Ext, {2, 3}, bar(0, 1)});            // 4
  c.steps.push_back({CertOp::Tensor, {4}, bar(1, 1)});            // 5
  c.steps.push_back({CertOp::Ext, {5, 4}, bar(0, 2)});            // 6
  c.steps.push_back({CertOp::Ker, {6, 6}, bar(0, 2)});            // 7
  c.steps.push_back({CertOp::Coker, {7, 6}, bar(2, 2)});          // 8
  c.steps.push_back({CertOp::Tensor, {6}, bar(0, 0)});            // 9
  c.steps.push_back({CertOp::Ext, {9, 8}, bar(0, 2)});            // 10
  c.steps.push_back({CertOp::Tensor, {1}, SymbolicBarcode::full_dust()});
  return c;
}

inline std::vector<DerivationCertificate> adversarial_certificates() {
  std::vector<DerivationCertificate> out;
  auto line = SymbolicBarcode::whole_line_bar();
  auto dust = SymbolicBarcode::full_dust();
  auto bar = [](int a, int b) {
    return SymbolicBarcode{{ExtendedInterval::finite(a, b)}, {}};
  };
  auto ray_up = [](int a) {
    return SymbolicBarcode{{ExtendedInterval(a, std::nullopt)}, {}};
  };
  auto ray_down = [](int b) {
    return SymbolicBarcode{{ExtendedInterval(std::nullopt, b)}, {}};
  };
  auto with_seeds = [&](std::vector<CertStep> steps) {
    DerivationCertificate c;
    c.seeds = {SymbolicBarcode::zero(), dust};
    c.steps = std::move(steps);
    return c;
  };
  // direct unbounded claims through every op
  out.push_back(with_seeds({{CertOp::Tensor, {1}, line}}));
  out.push_back(with_seeds({{CertOp::Ext, {0, 1}, line}}));
  out.push_back(with_seeds({{CertOp::Ker, {1, 1}, line}}));
  out.push_back(with_seeds({{CertOp::Coker, {1, 1}, line}}));
  out.push_back(with_seeds({{CertOp::Tensor, {1}, ray_up(0)}}));
  out.push_back(with_seeds({{CertOp::Tensor, {1}, ray_down(0)}}));
  out.push_back(with_seeds({{CertOp::Ext, {1, 1}, ray_up(-3)}}));
  out.push_back(with_seeds({{CertOp::Ker, {0, 1}, ray_down(7)}}));
  // unbounded seed
  {
    DerivationCertificate c;
    c.seeds = {line};
    out.push_back(c);
  }
  // unbounded claim buried mid-chain behind bounded steps
  out.push_back(with_seeds({{CertOp::Tensor, {1}, SymbolicBarcode{{}, {Dust(0, 2)}}},
                            {CertOp::Ext, {2, 2}, ray_up(0)},
                            {CertOp::Tensor, {3}, bar(0, 0)}}));
  // claims not covered by their operands
  out.push_back(with_seeds({{CertOp::Tensor, {0}, bar(0, 5)}}));
  out.push_back(with_seeds({{CertOp::Ker, {0, 1}, bar(1, 2)}}));
  out.push_back(with_seeds({{CertOp::Coker, {1, 0}, bar(0, 0)}}));
  out.push_back(with_seeds(
      {{CertOp::Tensor, {1}, bar(0, 0)}, {CertOp::Ker, {2, 2}, bar(0, 1)}}));
  // structural malformations
  out.push_back(with_seeds({{CertOp::Tensor, {2}, bar(0, 0)}}));   // fwd ref
  out.push_back(with_seeds({{CertOp::Tensor, {-1}, bar(0, 0)}}));  // negative
  out.push_back(with_seeds({{CertOp::Ext, {0}, bar(0, 0)}}));      // arity
  out.push_back(with_seeds({{CertOp::Tensor, {0, 1}, bar(0, 0)}}));
  out.push_back(with_seeds({{CertOp::Ker, {5, 1}, bar(0, 0)}}));
  // growing a dust progression beyond its operand
  out.push_back(with_seeds(
      {{CertOp::Tensor, {1}, SymbolicBarcode{{}, {Dust(0, 2)}}},
       {CertOp::Ker, {2, 2}, SymbolicBarcode{{}, {Dust(1, 2)}}}}));
  // claiming the whole line as dust-plus-ray
  out.push_back(with_seeds(
      {{CertOp::Ext, {1, 1}, SymbolicBarcode{{ExtendedInterval::whole_line()},
                                             {Dust(0, 1)}}}}));
  return out;
}

inline SuiteResult certificate_suite() {
  SuiteResult r{"derivation_certificates"};
  auto good = accepted_certificate();
  auto verdict = check_derivation(good);
  r.check(verdict.ok, "bounded derivation rejected at step " +
                          std::to_string(verdict.step) + ": " + verdict.reason);
  r.check(good.steps.size() >= 10, "reference derivation too short");
  auto bad = adversarial_certificates();
  r.check(bad.size() >= 20, "adversarial corpus too small");
  for (std::size_t i = 0; i < bad.size(); ++i) {
    auto v = check_derivation(bad[i]);
    r.check(!v.ok, "adversarial certificate " + std::to_string(i) +
                       " wrongly accepted");
  }
  // soundness: an accepted certificate's final object is bounded, so no
  // accepted certificate ends at the whole-line barcode
  if (!good.steps.empty())
    r.check(is_bounded(good.steps.back().claim),
            "accepted final object unbounded");
  return r;
}

}  // namespace suites

// Everything `verify-lemmas` runs; scale in [1..] multiplies trial counts.
inline std::vector<SuiteResult> run_all_suites(std::uint64_t seed, int scale) {
  std::vector<SuiteResult> out;
  out.push_back(suites::barcode_oracle_suite(seed + 1, 60 * scale));
  out.push_back(suites::exactness_suite(seed + 2, 30 * scale));
  out.push_back(suites::boolean_suite());
  out.push_back(suites::correspondence_suite(seed + 4, 2 * scale));
  out.push_back(suites::prime_axiom_suite(seed + 5, 10 * scale));
  out.push_back(suites::topology_suite(seed + 6));
  out.push_back(suites::witness_suite(seed + 7, 10 * scale));
  out.push_back(suites::symbolic_hom_suite());
  out.push_back(suites::containment_suite(seed + 9, 30 * scale));
  out.push_back(suites::bounded_extension_suite(seed + 10, 40 * scale));
  out.push_back(suites::symbolic_tensor_suite(seed + 11, 40 * scale));
  out.push_back(suites::certificate_suite());
  return out;
}

}  // namespace azrep
