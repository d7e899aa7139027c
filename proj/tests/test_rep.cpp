#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "azrep/gen.hpp"
#include "azrep/rep.hpp"

using namespace azrep;

TEST_CASE("window bookkeeping") {
  QuiverWindow w(0, 3, "RLR");
  CHECK(w.size() == 4);
  CHECK(w.arrow_source(0) == 0);
  CHECK(w.arrow_target(0) == 1);
  CHECK(w.arrow_source(1) == 2);  // L: arrow 2 -> 1
  CHECK(w.arrow_target(1) == 1);
  CHECK(w.is_sink(1));
  CHECK(w.is_source(2));
  CHECK(w.is_source(0));  // boundary, single outgoing arrow
  CHECK(w.is_sink(3));
  CHECK(w.max_path_length() == 1);
  CHECK(QuiverWindow(0, 4, "RRLL").max_path_length() == 2);
  CHECK_THROWS(QuiverWindow(0, 2, "R"));
  CHECK_THROWS(QuiverWindow(0, 1, "X"));
}

TEST_CASE("interval representation and support") {
  QuiverWindow w(0, 4, "RRLR");
  GF f(2);
  auto s = VertexSet::range(0, 4, 1, 3);
  auto k = interval_rep(w, s, f);
  CHECK(k.dims == std::vector<int>{0, 1, 1, 1, 0});
  CHECK(support(k) == s);
  // interior arrows carry the identity
  CHECK(k.maps[1].at(0, 0) == f.one());
  CHECK(k.maps[2].at(0, 0) == f.one());
  k.validate();
  // disconnected set: identity only within components
  auto d = VertexSet::of(0, 4, {0, 2, 3});
  auto kd = interval_rep(w, d, f);
  CHECK(kd.maps[0].rows() == 0);  // arrow 0 -> 1 lands outside the set
  CHECK(kd.maps[2].at(0, 0) == f.one());
}

TEST_CASE("tensor is pointwise with Kronecker maps") {
  QuiverWindow w(0, 2, "RR");
  QQ q;
  auto a = interval_rep(w, VertexSet::range(0, 2, 0, 1), q);
  auto b = interval_rep(w, VertexSet::range(0, 2, 1, 2), q);
  auto t = tensor(a, b);
  CHECK(t.dims == std::vector<int>{0, 1, 0});
  CHECK(t == interval_rep(w, VertexSet::of(0, 2, {1}), q));
  // unit acts as identity
  auto u = unit_rep(w, q);
  CHECK(tensor(a, u) == a);
}

TEST_CASE("kernel and cokernel of an explicit morphism") {
  QuiverWindow w(0, 1, "R");
  QQ q;
  // f: K_[0,1] -> K_[0,1], multiplication by 0 at vertex 1 is not a valid
  // morphism; use the zero morphism and the identity instead.
  auto k01 = unit_rep(w, q);
  Morphism<QQ> zero{k01, k01, {Matrix<QQ>(q, 1, 1), Matrix<QQ>(q, 1, 1)}};
  CHECK(zero.is_valid());
  auto [ker, incl] = kernel(zero);
  CHECK(ker.dims == std::vector<int>{1, 1});
  CHECK(is_mono(incl));
  auto [cok, proj] = cokernel(zero);
  CHECK(cok.dims == std::vector<int>{1, 1});
  CHECK(is_epi(proj));

  Morphism<QQ> id{k01, k01,
                  {Matrix<QQ>::identity(q, 1), Matrix<QQ>::identity(q, 1)}};
  CHECK(kernel(id).first.dims == std::vector<int>{0, 0});
  CHECK(cokernel(id).first.dims == std::vector<int>{0, 0});
}

TEST_CASE("extension middle glues interval representations") {
  // 0 -> K_{1} -> K_{[0,1]} -> K_{0} -> 0 over rightward orientation
  QuiverWindow w(0, 1, "R");
  GF f(5);
  auto sub = interval_rep(w, VertexSet::of(0, 1, {1}), f);
  auto quot = interval_rep(w, VertexSet::of(0, 1, {0}), f);
  Matrix<GF> eps(f, 1, 1);
  eps.at(0, 0) = f.one();
  auto ext = extension(sub, quot, {eps});
  CHECK(ext.middle == unit_rep(w, f));
  CHECK(is_mono(ext.inclusion));
  CHECK(is_epi(ext.projection));
  // zero eps gives the direct sum instead
  auto split = split_extension(sub, quot);
  CHECK(split.middle.dims == std::vector<int>{1, 1});
  CHECK(split.middle.maps[0].is_zero());
}

TEST_CASE("kernel_rank_one yields the all-ones dust object") {
  QuiverWindow w(0, 2, "RL");
  GF f(2);
  Representation<GF> x{w, f, {2, 3, 1}, {}};
  x.maps.emplace_back(f, 3, 2);
  x.maps.emplace_back(f, 3, 1);
  x.validate();
  auto endo = kernel_rank_one(x);
  CHECK(endo.is_valid());
  auto [ker, incl] = kernel(endo);
  CHECK(ker == dust_rep(w, f));
  CHECK(is_mono(incl));
}

TEST_CASE("hom space dimension by brute force") {
  QuiverWindow w(0, 2, "RR");
  QQ q;
  auto k02 = unit_rep(w, q);
  auto k01 = interval_rep(w, VertexSet::range(0, 2, 0, 1), q);
  auto k12 = interval_rep(w, VertexSet::range(0, 2, 1, 2), q);
  CHECK(hom_dim(k02, k02) == 1);
  CHECK(hom_dim(k12, k01) == 1);  // right-end overlap from the left
  CHECK(hom_dim(k01, k12) == 0);
  auto sum = direct_sum(k01, k01);
  CHECK(hom_dim(sum, k01) == 2);
}

TEST_CASE("random morphisms are morphisms") {
  Rng g(17);
  QuiverWindow w(0, 3, "RLR");
  GF f(5);
  for (int i = 0; i < 20; ++i) {
    auto a = random_rep(g, w, f, 3, 2);
    auto b = random_rep(g, w, f, 3, 2);
    auto m = random_morphism(g, a, b);
    CHECK(m.is_valid());
  }
}
