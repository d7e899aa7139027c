#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace azrep {

// A finite window [lo, hi] of a type-A quiver. orientation[k] describes the
// arrow between vertices lo+k and lo+k+1: 'R' means lo+k -> lo+k+1,
// 'L' means lo+k+1 -> lo+k.
struct QuiverWindow {
  int lo = 0;
  int hi = 0;
  std::string orientation;

  QuiverWindow() = default;
  QuiverWindow(int lo_, int hi_, std::string orient)
      : lo(lo_), hi(hi_), orientation(std::move(orient)) {
    if (lo > hi) throw std::invalid_argument("QuiverWindow: lo > hi");
    if (static_cast<int>(orientation.size()) != hi - lo)
      throw std::invalid_argument("QuiverWindow: orientation length mismatch");
    for (char c : orientation)
      if (c != 'R' && c != 'L')
        throw std::invalid_argument("QuiverWindow: orientation must be R/L");
  }

  int size() const { return hi - lo + 1; }
  int num_arrows() const { return hi - lo; }

  bool arrow_right(int k) const { return orientation[k] == 'R'; }
  // Vertex indices (absolute) of arrow k.
  int arrow_source(int k) const { return arrow_right(k) ? lo + k : lo + k + 1; }
  int arrow_target(int k) const { return arrow_right(k) ? lo + k + 1 : lo + k; }

  // Longest run of equal orientation symbols = longest path length.
  int max_path_length() const {
    int best = 0, run = 0;
    for (std::size_t i = 0; i < orientation.size(); ++i) {
      run = (i > 0 && orientation[i] == orientation[i - 1]) ? run + 1 : 1;
      best = std::max(best, run);
    }
    return best;
  }

  // Boundary vertices take their role from their single incident arrow.
  bool is_sink(int v) const {
    bool in_left = v > lo && orientation[v - lo - 1] == 'R';
    bool in_right = v < hi && orientation[v - lo] == 'L';
    bool out_left = v > lo && orientation[v - lo - 1] == 'L';
    bool out_right = v < hi && orientation[v - lo] == 'R';
    return (in_left || in_right) && !(out_left || out_right);
  }
  bool is_source(int v) const {
    bool in_left = v > lo && orientation[v - lo - 1] == 'R';
    bool in_right = v < hi && orientation[v - lo] == 'L';
    bool out_left = v > lo && orientation[v - lo - 1] == 'L';
    bool out_right = v < hi && orientation[v - lo] == 'R';
    return (out_left || out_right) && !(in_left || in_right);
  }

  bool operator==(const QuiverWindow& o) const = default;
};

// Subset of window vertices as a bitset. Doubles as the finite-subset type
// of the Boolean-algebra side; windows stay well under 64 vertices.
struct VertexSet {
  int lo = 0;
  int hi = 0;
  std::uint64_t bits = 0;

  VertexSet() = default;
  VertexSet(int lo_, int hi_) : lo(lo_), hi(hi_) {
    if (lo > hi) throw std::invalid_argument("VertexSet: lo > hi");
    if (hi - lo + 1 > 64) throw std::invalid_argument("VertexSet: universe > 64");
  }

  int size() const { return hi - lo + 1; }
  bool contains(int v) const {
    return v >= lo && v <= hi && (bits >> (v - lo)) & 1;
  }
  void insert(int v) {
    check_range(v);
    bits |= std::uint64_t{1} << (v - lo);
  }
  void erase(int v) {
    check_range(v);
    bits &= ~(std::uint64_t{1} << (v - lo));
  }
  int count() const { return __builtin_popcountll(bits); }
  bool empty() const { return bits == 0; }
  bool full() const { return bits == mask(); }

  std::uint64_t mask() const {
    int n = size();
    return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }

  VertexSet with(std::uint64_t b) const {
    VertexSet r(lo, hi);
    r.bits = b & mask();
    return r;
  }
  VertexSet complement() const { return with(~bits); }
  VertexSet union_with(const VertexSet& o) const {
    check_universe(o);
    return with(bits | o.bits);
  }
  VertexSet intersect(const VertexSet& o) const {
    check_universe(o);
    return with(bits & o.bits);
  }
  VertexSet minus(const VertexSet& o) const {
    check_universe(o);
    return with(bits & ~o.bits);
  }
  bool subset_of(const VertexSet& o) const {
    check_universe(o);
    return (bits & ~o.bits) == 0;
  }

  std::vector<int> elements() const {
    std::vector<int> r;
    for (int v = lo; v <= hi; ++v)
      if (contains(v)) r.push_back(v);
    return r;
  }

  // Maximal runs of consecutive members, as [first, last] pairs.
  std::vector<std::pair<int, int>> components() const {
    std::vector<std::pair<int, int>> comps;
    for (int v = lo; v <= hi; ++v) {
      if (!contains(v)) continue;
      if (!comps.empty() && comps.back().second == v - 1)
        comps.back().second = v;
      else
        comps.emplace_back(v, v);
    }
    return comps;
  }

  // No two members adjacent.
  bool totally_disconnected() const {
    for (auto& [a, b] : components())
      if (a != b) return false;
    return true;
  }

  static VertexSet of(int lo, int hi, std::initializer_list<int> vs) {
    VertexSet s(lo, hi);
    for (int v : vs) s.insert(v);
    return s;
  }
  static VertexSet range(int lo, int hi, int a, int b) {
    VertexSet s(lo, hi);
    for (int v = std::max(a, lo); v <= std::min(b, hi); ++v) s.insert(v);
    return s;
  }
  static VertexSet all(int lo, int hi) {
    VertexSet s(lo, hi);
    s.bits = s.mask();
    return s;
  }

  bool operator==(const VertexSet& o) const = default;
  bool operator<(const VertexSet& o) const { return bits < o.bits; }

 private:
  void check_range(int v) const {
    if (v < lo || v > hi) throw std::out_of_range("VertexSet: vertex outside");
  }
  void check_universe(const VertexSet& o) const {
    if (lo != o.lo || hi != o.hi)
      throw std::invalid_argument("VertexSet: universe mismatch");
  }
};

using IntervalSet = VertexSet;
using FiniteSubset = VertexSet;

}  // namespace azrep
