#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "azrep/gen.hpp"
#include "azrep/spectrum.hpp"

using namespace azrep;

TEST_CASE("membership in point ideals is pointwise vanishing") {
  QuiverWindow w(0, 3, "RLR");
  GF f(2);
  auto k = interval_rep(w, VertexSet::range(0, 3, 1, 2), f);
  CHECK(membership(k, {0}));
  CHECK(!membership(k, {1}));
  CHECK(!membership(k, {2}));
  CHECK(membership(k, {3}));
  CHECK_THROWS(membership(k, {9}));
}

TEST_CASE("phi sends the point tensor ideal to the Boolean point ideal") {
  QuiverWindow w(0, 2, "RL");
  for (int a = 0; a <= 2; ++a) {
    auto fam = phi(w, {a});
    CHECK(fam == point_ideal(0, 2, a));
    CHECK(psi(prime_point_of(fam)) == PointTensorIdeal{a});
  }
}

TEST_CASE("membership matches the support family") {
  Rng g(3);
  QuiverWindow w(0, 4, "RRLL");
  GF f(5);
  for (int i = 0; i < 50; ++i) {
    auto v = random_rep(g, w, f, 3, 2);
    auto s = support(v);
    for (int a = 0; a <= 4; ++a)
      CHECK(membership(v, {a}) == phi(w, {a}).contains(s));
  }
}

TEST_CASE("closed sets and their complements") {
  QuiverWindow w(0, 3, "RRR");
  GF f(2);
  auto model = SpcFiniteModel::of(w);
  // Z({K_{[1,2]}}) = {M_a : a in [1,2]}... no: M in Z(S) iff no member of S
  // lies in M, i.e. K never vanishes at a, i.e. a in supp
  auto k = interval_rep(w, VertexSet::range(0, 3, 1, 2), f);
  auto z = zariski_closed<GF>({k}, model);
  REQUIRE(z.size() == 2);
  CHECK(z[0].a == 1);
  CHECK(z[1].a == 2);
  auto c = closed_complement(z, model);
  REQUIRE(c.size() == 2);
  CHECK(c[0].a == 0);
  CHECK(c[1].a == 3);
  // empty family: everything survives
  CHECK(zariski_closed(std::vector<Representation<GF>>{}, model).size() == 4);
}

TEST_CASE("clopen complement formula") {
  Rng g(11);
  for (int size = 1; size <= 6; ++size) {
    QuiverWindow w(0, size - 1, random_orientation(g, size - 1));
    auto model = SpcFiniteModel::of(w);
    GF f(2);
    for (int t = 0; t < 10; ++t) {
      auto v = random_rep(g, w, f, 3, 2);
      CHECK(clopen_check(v, model));
    }
  }
}

TEST_CASE("spectrum is Hausdorff and matches the Boolean spectrum") {
  Rng g(7);
  for (int size = 1; size <= 6; ++size) {
    QuiverWindow w(0, size - 1, random_orientation(g, size - 1));
    auto model = SpcFiniteModel::of(w);
    CHECK(hausdorff_check(model, GF(2)));
    CHECK(homeomorphism_check(model, GF(2)));
  }
}
