#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "azrep/gen.hpp"
#include "azrep/json_io.hpp"
#include "azrep/suites.hpp"
#include "azrep/symbolic.hpp"

using namespace azrep;

TEST_CASE("extended intervals and boundedness") {
  auto line = ExtendedInterval::whole_line();
  CHECK(!line.bounded());
  CHECK(ExtendedInterval::finite(0, 5).bounded());
  CHECK(ExtendedInterval::finite(0, 5).contained_in(line));
  CHECK(!line.contained_in(ExtendedInterval::finite(0, 5)));
  CHECK(!is_bounded(SymbolicBarcode::whole_line_bar()));
  CHECK(is_bounded(SymbolicBarcode::full_dust()));
  SymbolicBarcode mix{{ExtendedInterval::finite(0, 5),
                       ExtendedInterval(3, std::nullopt)},
                      {}};
  CHECK(!is_bounded(mix));
}

TEST_CASE("symbolic tensor of bars and dust") {
  SymbolicBarcode x{{ExtendedInterval::finite(0, 5)}, {}};
  SymbolicBarcode y{{ExtendedInterval::finite(3, 9)}, {}};
  auto t = symbolic_tensor(x, y);
  REQUIRE(t.bars.size() == 1);
  CHECK(t.bars[0] == ExtendedInterval::finite(3, 5));
  CHECK(t.dust.empty());

  auto dust = SymbolicBarcode::full_dust();
  auto line = SymbolicBarcode::whole_line_bar();
  CHECK(symbolic_tensor(line, dust) == dust);

  // disjoint bars vanish
  SymbolicBarcode z{{ExtendedInterval::finite(7, 9)}, {}};
  CHECK(symbolic_tensor(x, z).bars.empty());

  // dust meets dust through the CRT
  SymbolicBarcode d2{{}, {Dust(0, 2)}};
  SymbolicBarcode d3{{}, {Dust(1, 3)}};
  auto dd = symbolic_tensor(d2, d3);
  REQUIRE(dd.dust.size() == 1);
  CHECK(dd.dust[0].period == 6);
  CHECK(dd.dust[0].contains(4));
  CHECK(!dd.dust[0].contains(2));
  // incompatible residues vanish
  SymbolicBarcode e2{{}, {Dust(1, 2)}};
  CHECK(symbolic_tensor(d2, e2).dust.empty());
}

TEST_CASE("hom formula for the rightward line") {
  using EI = ExtendedInterval;
  CHECK(hom_dim_linear(EI::finite(1, 3), EI::finite(0, 2)) == 1);
  CHECK(hom_dim_linear(EI::finite(0, 2), EI::finite(1, 3)) == 0);
  CHECK(hom_dim_linear(EI::finite(2, 4), EI::finite(2, 4)) == 1);
  // rays and the full line
  CHECK(hom_dim_linear(EI::whole_line(), EI::whole_line()) == 1);
  CHECK(hom_dim_linear(EI(0, std::nullopt), EI::whole_line()) == 1);
  CHECK(hom_dim_linear(EI::whole_line(), EI(0, std::nullopt)) == 0);
  CHECK(hom_dim_linear(EI(std::nullopt, 0), EI::whole_line()) == 0);
  CHECK(hom_dim_linear(EI::whole_line(), EI(std::nullopt, 0)) == 1);
}

TEST_CASE("hom formula agrees with brute force on small windows") {
  auto r = suites::symbolic_hom_suite();
  INFO(r.detail);
  CHECK(r.passed);
  CHECK(r.checks > 1000);
}

TEST_CASE("mono containment on an explicit inclusion") {
  QuiverWindow w(-1, 1, "RR");
  GF f(2);
  auto small = interval_rep(w, VertexSet::range(-1, 1, 0, 1), f);
  auto big = unit_rep(w, f);
  // the inclusion is the identity where both are nonzero
  Morphism<GF> incl{small, big, {}};
  for (int v = -1; v <= 1; ++v) {
    Matrix<GF> c(f, 1, small.dim_at(v));
    if (small.dim_at(v)) c.at(0, 0) = f.one();
    incl.components.push_back(std::move(c));
  }
  REQUIRE(incl.is_valid());
  REQUIRE(is_mono(incl));
  auto verdict = mono_containment_check(incl);
  CHECK(verdict.applicable);
  CHECK(verdict.ok);
  REQUIRE(verdict.pairs.size() == 1);
  CHECK(verdict.pairs[0].first == Interval{0, 1});
  CHECK(verdict.pairs[0].second == Interval{-1, 1});

  auto ds = direct_summand_of_tensor_check(incl);
  CHECK(ds.applicable);
  CHECK(ds.ok);
  // here V (x) W = V on the nose
  CHECK(decompose(tensor(small, big)) == decompose(small));
}

TEST_CASE("no mono exists between incompatible intervals") {
  QuiverWindow w(0, 3, "RRR");
  GF f(2);
  auto k01 = interval_rep(w, VertexSet::range(0, 3, 0, 1), f);
  auto k23 = interval_rep(w, VertexSet::range(0, 3, 2, 3), f);
  auto k00 = interval_rep(w, VertexSet::of(0, 3, {0}), f);
  CHECK(hom_dim(k01, direct_sum(k23, k00)) ==
        hom_dim(k01, k23) + hom_dim(k01, k00));
  CHECK(hom_dim(k01, k23) == 0);
  CHECK(hom_dim(k01, k00) == 1);  // exists but cannot be mono at vertex 1
}

TEST_CASE("bounded extension keeps bars off the infinity edge") {
  QuiverWindow w(0, 3, "RRR");
  GF f(5);
  auto v1 = interval_rep(w, VertexSet::of(0, 3, {1}), f);
  auto v2 = interval_rep(w, VertexSet::of(0, 3, {0}), f);
  Matrix<GF> e0(f, 1, 1);
  e0.at(0, 0) = f.one();
  std::vector<Matrix<GF>> eps{e0, Matrix<GF>(f, 0, 0), Matrix<GF>(f, 0, 0)};
  auto verdict = bounded_extension_check(v1, v2, eps);
  CHECK(verdict.applicable);
  CHECK(verdict.ok);
  // the middle is K_{[0,1]}, still interior
  auto mid = extension(v1, v2, eps).middle;
  CHECK(decompose(mid).mult({0, 1}) == 1);
  // an input touching the edge is refused
  auto edge = interval_rep(w, VertexSet::of(0, 3, {3}), f);
  auto refused = bounded_extension_check(edge, v2, std::vector<Matrix<GF>>{
      Matrix<GF>(f, 0, 1), Matrix<GF>(f, 0, 0), Matrix<GF>(f, 1, 0)});
  CHECK(!refused.applicable);
}

TEST_CASE("certificate checker accepts the reference derivation") {
  auto cert = suites::accepted_certificate();
  auto v = check_derivation(cert);
  INFO(v.reason);
  CHECK(v.ok);
  CHECK(cert.steps.size() >= 10);
}

TEST_CASE("certificate checker rejects the adversarial corpus") {
  auto corpus = suites::adversarial_certificates();
  CHECK(corpus.size() >= 20);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    auto v = check_derivation(corpus[i]);
    INFO("certificate ", i);
    CHECK(!v.ok);
  }
}

TEST_CASE("no accepted certificate claims the whole line") {
  // directly: any step claiming an unbounded bar fails
  DerivationCertificate c;
  c.seeds = {SymbolicBarcode::zero(), SymbolicBarcode::full_dust()};
  c.steps.push_back({CertOp::Ext, {0, 1}, SymbolicBarcode::whole_line_bar()});
  auto v = check_derivation(c);
  CHECK(!v.ok);
  CHECK(v.step == 0);
}

TEST_CASE("certificate json round trip") {
  auto cert = suites::accepted_certificate();
  auto j = cert_to_json(cert);
  auto back = cert_from_json(j);
  CHECK(back.seeds == cert.seeds);
  REQUIRE(back.steps.size() == cert.steps.size());
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    CHECK(back.steps[i].op == cert.steps[i].op);
    CHECK(back.steps[i].args == cert.steps[i].args);
    CHECK(back.steps[i].claim == cert.steps[i].claim);
  }
  // symbolic barcodes with infinities survive the trip
  SymbolicBarcode sb{{ExtendedInterval::whole_line(),
                      ExtendedInterval(std::nullopt, 4)},
                     {Dust(1, 3, -2, 10)}};
  CHECK(symbolic_from_json(symbolic_to_json(sb)) == sb);
}
