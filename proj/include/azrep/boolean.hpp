#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "azrep/quiver.hpp"

namespace azrep {

// P(U) for the universe U = {lo..hi}, as a Boolean algebra and as the
// associated Boolean ring (symmetric difference / intersection).
inline FiniteSubset bool_join(const FiniteSubset& x, const FiniteSubset& y) {
  return x.union_with(y);
}
inline FiniteSubset bool_meet(const FiniteSubset& x, const FiniteSubset& y) {
  return x.intersect(y);
}
inline FiniteSubset bool_complement(const FiniteSubset& x) {
  return x.complement();
}
inline FiniteSubset ring_add(const FiniteSubset& x, const FiniteSubset& y) {
  if (x.lo != y.lo || x.hi != y.hi)
    throw std::invalid_argument("ring_add: universe mismatch");
  return x.with(x.bits ^ y.bits);
}
inline FiniteSubset ring_mul(const FiniteSubset& x, const FiniteSubset& y) {
  return x.intersect(y);
}

// Coordinatewise indicator vector: the ring homomorphism into prod Z/2Z.
inline std::vector<int> to_indicator(const FiniteSubset& x) {
  std::vector<int> r;
  for (int v = x.lo; v <= x.hi; ++v) r.push_back(x.contains(v) ? 1 : 0);
  return r;
}

// Explicit family of subsets of one universe.
struct BooleanIdealFamily {
  int lo = 0;
  int hi = 0;
  std::set<std::uint64_t> members;

  int universe_size() const { return hi - lo + 1; }
  std::uint64_t universe_mask() const {
    return FiniteSubset(lo, hi).mask();
  }
  bool contains(const FiniteSubset& s) const {
    return members.count(s.bits) > 0;
  }
  void insert(const FiniteSubset& s) { members.insert(s.bits); }

  std::vector<FiniteSubset> subsets() const {
    std::vector<FiniteSubset> r;
    FiniteSubset proto(lo, hi);
    for (auto b : members) r.push_back(proto.with(b));
    return r;
  }

  bool operator==(const BooleanIdealFamily&) const = default;
};

// Nonempty, join-closed and downward-closed.
inline bool is_ideal(const BooleanIdealFamily& f) {
  if (f.members.empty()) return false;
  for (auto a : f.members)
    for (auto b : f.members)
      if (!f.members.count(a | b)) return false;
  for (auto b : f.members) {
    // All subsets of b must be present.
    for (std::uint64_t s = b;; s = (s - 1) & b) {
      if (!f.members.count(s)) return false;
      if (s == 0) break;
    }
  }
  return true;
}

inline bool is_prime_ideal(const BooleanIdealFamily& f) {
  if (!is_ideal(f)) return false;
  std::uint64_t um = f.universe_mask();
  if (f.members.count(um)) return false;  // not proper
  std::uint64_t n = um + 1;
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = 0; b < n; ++b)
      if (f.members.count(a & b) && !f.members.count(a) && !f.members.count(b))
        return false;
  return true;
}

// P_a = all subsets omitting a.
inline BooleanIdealFamily point_ideal(int lo, int hi, int a) {
  if (a < lo || a > hi) throw std::out_of_range("point_ideal: a outside U");
  BooleanIdealFamily f{lo, hi, {}};
  std::uint64_t um = f.universe_mask();
  std::uint64_t abit = std::uint64_t{1} << (a - lo);
  for (std::uint64_t s = 0; s <= um; ++s)
    if (!(s & abit)) f.members.insert(s);
  return f;
}

enum class PrimeEnumerationMode { Exhaustive, Principal };

// Exhaustive mode scans all 2^(2^|U|) families (ground truth, |U| <= 4);
// principal mode constructs {P_a : a in U} directly.
inline std::vector<BooleanIdealFamily> enumerate_primes(
    int lo, int hi, PrimeEnumerationMode mode) {
  std::vector<BooleanIdealFamily> primes;
  if (mode == PrimeEnumerationMode::Principal) {
    for (int a = lo; a <= hi; ++a) primes.push_back(point_ideal(lo, hi, a));
    return primes;
  }
  int u = hi - lo + 1;
  if (u > 4)
    throw std::invalid_argument("enumerate_primes: universe too large for brute force");
  std::uint64_t nsubsets = std::uint64_t{1} << u;
  std::uint64_t nfamilies = std::uint64_t{1} << nsubsets;
  for (std::uint64_t fam = 0; fam < nfamilies; ++fam) {
    BooleanIdealFamily f{lo, hi, {}};
    for (std::uint64_t s = 0; s < nsubsets; ++s)
      if ((fam >> s) & 1) f.members.insert(s);
    if (is_prime_ideal(f)) primes.push_back(f);
  }
  return primes;
}

// No proper ideal strictly between f and P(U). Exhaustive; |U| <= 3.
inline bool is_maximal_ideal(const BooleanIdealFamily& f) {
  int u = f.universe_size();
  if (u > 3) throw std::invalid_argument("is_maximal_ideal: universe too large");
  if (!is_ideal(f) || f.members.count(f.universe_mask())) return false;
  std::uint64_t nsubsets = std::uint64_t{1} << u;
  std::uint64_t nfamilies = std::uint64_t{1} << nsubsets;
  for (std::uint64_t fam = 0; fam < nfamilies; ++fam) {
    BooleanIdealFamily g{f.lo, f.hi, {}};
    for (std::uint64_t s = 0; s < nsubsets; ++s)
      if ((fam >> s) & 1) g.members.insert(s);
    if (!is_ideal(g) || g.members.count(g.universe_mask())) continue;
    bool contains_f = true;
    for (auto b : f.members)
      if (!g.members.count(b)) { contains_f = false; break; }
    if (contains_f && g.members.size() > f.members.size()) return false;
  }
  return true;
}

// Smallest union-closed, downward-closed family containing the seeds: the
// Boolean-side shadow of the tensor ideal generated by {K_I : I in seeds}.
inline BooleanIdealFamily support_ideal_closure(
    int lo, int hi, const std::vector<FiniteSubset>& seeds) {
  BooleanIdealFamily f{lo, hi, {}};
  f.members.insert(0);
  for (auto& s : seeds) {
    if (s.lo != lo || s.hi != hi)
      throw std::invalid_argument("support_ideal_closure: universe mismatch");
    f.members.insert(s.bits);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::uint64_t> cur(f.members.begin(), f.members.end());
    for (auto a : cur)
      for (auto b : cur)
        if (f.members.insert(a | b).second) changed = true;
    for (auto b : cur) {
      for (std::uint64_t s = b;; s = (s - 1) & b) {
        if (f.members.insert(s).second) changed = true;
        if (s == 0) break;
      }
    }
  }
  return f;
}

}  // namespace azrep
