#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "azrep/barcode.hpp"
#include "azrep/gen.hpp"
#include "azrep/json_io.hpp"

using namespace azrep;

TEST_CASE("rank invariant of interval representations") {
  GF f(2);
  for (const char* orient : {"RR", "RL", "LR", "LL"}) {
    QuiverWindow w(0, 2, orient);
    auto k = interval_rep(w, VertexSet::range(0, 2, 0, 1), f);
    // r(a,b) counts bars containing [a,b]
    CHECK(rank_invariant(k, 0, 0) == 1);
    CHECK(rank_invariant(k, 1, 1) == 1);
    CHECK(rank_invariant(k, 2, 2) == 0);
    CHECK(rank_invariant(k, 0, 1) == 1);
    CHECK(rank_invariant(k, 0, 2) == 0);
    CHECK(rank_invariant(k, 1, 2) == 0);
  }
}

TEST_CASE("decompose recovers simple barcodes exactly") {
  QuiverWindow w(0, 3, "RLR");
  QQ q;
  Barcode bc;
  bc.add({0, 1}, 2);
  bc.add({1, 3}, 1);
  bc.add({2, 2}, 1);
  auto v = assemble(w, bc, q);
  CHECK(decompose(v) == bc);
}

TEST_CASE("barcode is invariant under base change") {
  Rng g(5);
  for (int trial = 0; trial < 30; ++trial) {
    int size = rand_int(g, 2, 8);
    QuiverWindow w(0, size - 1, random_orientation(g, size - 1));
    Barcode bc = random_barcode(g, w, 4, 3);
    GF f(5);
    auto v = assemble(w, bc, f);
    auto conj = base_change(v, g());
    CHECK(decompose(conj) == bc);
    CHECK(isomorphic(v, conj));
  }
}

TEST_CASE("direct sum adds barcodes, tensor intersects intervals") {
  QuiverWindow w(0, 4, "RRRR");
  GF f(2);
  auto a = interval_rep(w, VertexSet::range(0, 4, 0, 3), f);
  auto b = interval_rep(w, VertexSet::range(0, 4, 2, 4), f);
  auto ds = decompose(direct_sum(a, b));
  CHECK(ds.mult({0, 3}) == 1);
  CHECK(ds.mult({2, 4}) == 1);
  auto t = decompose(tensor(a, b));
  CHECK(t.mult({2, 3}) == 1);
  CHECK(t.total_bars() == 1);
}

TEST_CASE("zero representation has the empty barcode") {
  QuiverWindow w(0, 2, "LL");
  CHECK(decompose(zero_rep(w, GF(2))).total_bars() == 0);
}

TEST_CASE("dust object decomposes into length-zero bars") {
  QuiverWindow w(0, 3, "RRR");
  auto d = dust_rep(w, QQ{});
  auto bc = decompose(d);
  CHECK(bc.total_bars() == 4);
  for (int v = 0; v <= 3; ++v) CHECK(bc.mult({v, v}) == 1);
}

TEST_CASE("representation json round trip") {
  Rng g(23);
  QuiverWindow w(-1, 2, "RLR");
  auto v = random_rep(g, w, QQ{}, 3, 2);
  auto j = rep_to_json(v);
  auto back = rep_from_json(j, QQ{});
  CHECK(back == v);
  CHECK(rep_field_name(j) == "rational");

  auto v2 = random_rep(g, w, GF(2), 3, 2);
  CHECK(rep_from_json(rep_to_json(v2), GF(2)) == v2);
}

TEST_CASE("barcode json round trip") {
  Barcode bc;
  bc.add({-2, 5}, 3);
  bc.add({0, 0}, 1);
  CHECK(barcode_from_json(barcode_to_json(bc)) == bc);
}

TEST_CASE("ascii bars") {
  Barcode bc;
  bc.add({0, 2}, 1);
  auto s = ascii_bars(bc, 0);
  CHECK(s.find("0") != std::string::npos);
  CHECK(s.find("2") != std::string::npos);
}
