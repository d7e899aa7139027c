#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "azrep/gen.hpp"
#include "azrep/witness.hpp"

using namespace azrep;

TEST_CASE("sink/source labeling alternates around the base sink") {
  QuiverWindow w(0, 4, "RLRL");  // sinks at 1, 3; sources at 0, 2, 4
  auto lab = sinks_and_sources(w);
  CHECK(lab.pos(0) == 1);  // leftmost interior sink
  CHECK(lab.pos(1) == 2);
  CHECK(lab.pos(2) == 3);
  CHECK(lab.pos(-1) == 0);
  auto sinks = lab.sinks_in_window();
  CHECK(sinks == std::vector<int>{1, 3});
  CHECK(lab.sources_in_window() == std::vector<int>{0, 2, 4});
}

TEST_CASE("labeling falls back to a boundary sink") {
  QuiverWindow w(0, 1, "L");  // sink at 0, source at 1
  auto lab = sinks_and_sources(w);
  CHECK(lab.pos(0) == 0);
  // ghost labels continue past the boundary with spacing one
  CHECK(lab.has(1));
  CHECK(lab.pos(1) == 1);
  CHECK(lab.has(-1));
  CHECK(lab.pos(-1) == -1);
}

TEST_CASE("B, D, C cover the window and C collects the sources") {
  Rng g(2);
  for (int trial = 0; trial < 200; ++trial) {
    int size = rand_int(g, 2, 14);
    QuiverWindow w(0, size - 1, random_orientation(g, size - 1));
    auto lab = sinks_and_sources(w);
    auto bdc = bdc_sets(lab);
    CHECK(bdc.b.union_with(bdc.d).full());
    CHECK(bdc.c == bdc.b.intersect(bdc.d));
    // C = in-window sources
    VertexSet sources(w.lo, w.hi);
    for (int v = w.lo; v <= w.hi; ++v)
      if (w.is_source(v)) sources.insert(v);
    CHECK(bdc.c == sources);
    CHECK(bdc.c.totally_disconnected());
  }
}

TEST_CASE("saturation fixpoints") {
  QuiverWindow w(0, 3, "RRR");
  // {0} grows rightward until blocked by the sink at 3
  auto tr = saturate_right(VertexSet::of(0, 3, {0}), w);
  CHECK(tr.result == VertexSet::range(0, 3, 0, 2));
  CHECK(tr.layers.size() == 2);
  // already saturated set does not move
  auto fix = saturate_right(tr.result, w);
  CHECK(fix.layers.empty());
  // alternating orientation: one step suffices
  QuiverWindow alt(0, 3, "RLR");
  auto tra = saturate_right(VertexSet::of(0, 3, {0}), alt);
  CHECK(tra.layers.size() <= 1);
  // leftward mirror
  auto tl = saturate_left(VertexSet::of(0, 3, {3}), QuiverWindow(0, 3, "LLL"));
  CHECK(tl.result == VertexSet::range(0, 3, 1, 3));
}

TEST_CASE("saturation terminates within the path bound") {
  Rng g(9);
  for (int trial = 0; trial < 300; ++trial) {
    int size = rand_int(g, 2, 13);
    QuiverWindow w(0, size - 1, random_orientation(g, size - 1));
    auto s = random_subset(g, 0, size - 1);
    auto tr = saturate_right(s, w);
    CHECK(static_cast<int>(tr.layers.size()) <= w.max_path_length());
    auto tl = saturate_left(s, w);
    CHECK(static_cast<int>(tl.layers.size()) <= w.max_path_length());
  }
}

TEST_CASE("full witness on a hand-checked window") {
  QuiverWindow w(0, 2, "RL");  // sink at 1, sources at 0 and 2
  GF f(2);
  auto v = interval_rep(w, VertexSet::of(0, 2, {1}), f);
  auto ch = full_witness(w, v);
  std::string err;
  CHECK(verify_witness(ch, &err));
  INFO(err);
  CHECK(ch.case_split_member >= 0);
  CHECK(ch.branch_b.back().object == unit_rep(w, f));
  CHECK(ch.branch_d.back().object == unit_rep(w, f));
}

TEST_CASE("witness copes with a zero seed") {
  QuiverWindow w(0, 2, "RR");
  GF f(5);
  auto ch = full_witness(w, zero_rep(w, f));
  std::string err;
  CHECK(verify_witness(ch, &err));
}

TEST_CASE("tampered chains are rejected") {
  QuiverWindow w(0, 2, "RL");
  GF f(2);
  auto v = interval_rep(w, VertexSet::of(0, 2, {1}), f);
  auto ch = full_witness(w, v);
  REQUIRE(verify_witness(ch));
  // swap a claimed object for something else
  auto bad = ch;
  bad.branch_b.back().object = dust_rep(w, f);
  CHECK(!verify_witness(bad));
  // break a justification index
  auto bad2 = ch;
  if (!bad2.branch_d.empty()) {
    bad2.branch_d.front().why = JIsoReplace<GF>{0};  // K_D is not iso to V
    // seed V has a different barcode than K_D here
    CHECK(!verify_witness(bad2));
  }
}

TEST_CASE("randomized witnesses verify") {
  Rng g(31);
  for (int trial = 0; trial < 60; ++trial) {
    int size = rand_int(g, 2, 12);
    QuiverWindow w(0, size - 1, random_orientation(g, size - 1));
    GF f(2);
    auto v = random_rep(g, w, f, 3, 2);
    if (support(v).full()) {
      int cut = rand_int(g, 0, size - 1);
      Barcode kept;
      for (auto& [iv, m] : decompose(v).bars)
        if (!(iv.a <= cut && cut <= iv.b)) kept.add(iv, m);
      v = assemble(w, kept, f);
    }
    auto ch = full_witness(w, v);
    std::string err;
    bool ok = verify_witness(ch, &err);
    INFO("window ", w.orientation, ": ", err);
    CHECK(ok);
  }
}

TEST_CASE("step-count growth is linear for a periodic orientation") {
  GF f(2);
  std::vector<int> sizes{8, 12, 16}, lengths;
  for (int n : sizes) {
    std::string orient;
    for (int i = 0; i < n - 1; ++i) orient += (i / 2 % 2 == 0) ? 'R' : 'L';
    QuiverWindow w(0, n - 1, orient);
    CHECK(w.max_path_length() <= 2);
    auto ch = full_witness(w, zero_rep(w, f));
    // zero seed short-circuits; use a one-point seed for real chains
    auto v = interval_rep(w, VertexSet::of(0, n - 1, {1}), f);
    ch = full_witness(w, v);
    REQUIRE(verify_witness(ch));
    lengths.push_back(static_cast<int>(ch.trunk.size() + ch.branch_b.size() +
                                       ch.branch_d.size()));
  }
  // roughly linear: doubling the window should not quadruple the chain
  CHECK(lengths[2] <= 2 * lengths[0] + 8);
}
