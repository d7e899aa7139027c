#pragma once

#include <algorithm>
#include <vector>

#include "azrep/boolean.hpp"
#include "azrep/rep.hpp"

namespace azrep {

// The point tensor ideal M_a = {V : V_a = 0}.
struct PointTensorIdeal {
  int a = 0;
  auto operator<=>(const PointTensorIdeal&) const = default;
};

struct PrimePoint {
  int a = 0;
  auto operator<=>(const PrimePoint&) const = default;
};

// Finite model of Spc(Rep^pfd) on a window: one point ideal per vertex.
struct SpcFiniteModel {
  QuiverWindow window;
  std::vector<PointTensorIdeal> points;

  static SpcFiniteModel of(const QuiverWindow& w) {
    SpcFiniteModel m{w, {}};
    for (int v = w.lo; v <= w.hi; ++v) m.points.push_back({v});
    return m;
  }
};

template <class F>
bool membership(const Representation<F>& v, PointTensorIdeal m) {
  if (m.a < v.window.lo || m.a > v.window.hi)
    throw std::invalid_argument("membership: point outside window");
  return v.dim_at(m.a) == 0;
}

// phi(M_a) = {supp(V) : V in M_a} = P_a.
inline BooleanIdealFamily phi(const QuiverWindow& w, PointTensorIdeal m) {
  return point_ideal(w.lo, w.hi, m.a);
}

inline PointTensorIdeal psi(PrimePoint q) { return {q.a}; }

// The Boolean prime point of a principal prime family P_a (the unique a
// missing from every member).
inline PrimePoint prime_point_of(const BooleanIdealFamily& f) {
  for (int a = f.lo; a <= f.hi; ++a)
    if (f == point_ideal(f.lo, f.hi, a)) return {a};
  throw std::invalid_argument("prime_point_of: family is not a point ideal");
}

// Z(S) = {M : S and M disjoint} = points a lying in every support in S.
using ZariskiClosedSet = std::vector<PointTensorIdeal>;

template <class F>
ZariskiClosedSet zariski_closed(const std::vector<Representation<F>>& s,
                                const SpcFiniteModel& model) {
  ZariskiClosedSet z;
  for (auto m : model.points) {
    bool keep = true;
    for (auto& v : s) {
      if (v.window != model.window)
        throw std::invalid_argument("zariski_closed: window mismatch");
      if (membership(v, m)) { keep = false; break; }
    }
    if (keep) z.push_back(m);
  }
  return z;
}

inline ZariskiClosedSet closed_complement(const ZariskiClosedSet& z,
                                          const SpcFiniteModel& model) {
  ZariskiClosedSet c;
  for (auto m : model.points)
    if (std::find(z.begin(), z.end(), m) == z.end()) c.push_back(m);
  return c;
}

// Z({v})^c = Z({K_{window \ supp v}}) as point sets.
template <class F>
bool clopen_check(const Representation<F>& v, const SpcFiniteModel& model) {
  ZariskiClosedSet lhs = closed_complement(
      zariski_closed<F>({v}, model), model);
  auto comp = support(v).complement();
  auto kcomp = interval_rep(model.window, comp, v.field);
  ZariskiClosedSet rhs = zariski_closed<F>({kcomp}, model);
  return lhs == rhs;
}

// Every pair of distinct points separated by a basic clopen set and its
// complement.
template <class F>
bool hausdorff_check(const SpcFiniteModel& model, F f) {
  const auto& w = model.window;
  for (auto m1 : model.points)
    for (auto m2 : model.points) {
      if (m1 == m2) continue;
      bool separated = false;
      for (int a = w.lo; a <= w.hi && !separated; ++a) {
        auto k = interval_rep(w, VertexSet::of(w.lo, w.hi, {a}), f);
        auto z = zariski_closed<F>({k}, model);
        auto zc = closed_complement(z, model);
        bool in1 = std::find(z.begin(), z.end(), m1) != z.end();
        bool in2 = std::find(zc.begin(), zc.end(), m2) != zc.end();
        // z is clopen, so z and zc are disjoint open sets.
        if (in1 && in2) separated = true;
      }
      if (!separated) return false;
    }
  return true;
}

// psi maps Boolean-side basic closed sets bijectively onto the Zariski
// closed sets; checked by enumerating all basic closed sets Z({K_I}).
template <class F>
bool homeomorphism_check(const SpcFiniteModel& model, F f) {
  const auto& w = model.window;
  if (w.size() > 8)
    throw std::invalid_argument("homeomorphism_check: window too large");
  std::uint64_t n = std::uint64_t{1} << w.size();
  for (std::uint64_t bits = 0; bits < n; ++bits) {
    VertexSet supp = VertexSet(w.lo, w.hi).with(bits);
    auto k = interval_rep(w, supp, f);
    // Tensor-side basic closed set.
    auto z = zariski_closed<F>({k}, model);
    // Boolean-side: Z({I}) = {P_a : I not in P_a} = {P_a : a in I}.
    ZariskiClosedSet bool_side;
    for (auto m : model.points) {
      FiniteSubset i(w.lo, w.hi);
      i = i.with(bits);
      if (!phi(w, m).contains(i)) bool_side.push_back(psi(PrimePoint{m.a}));
    }
    if (z != bool_side) return false;
    // Preimage formula: psi^{-1}(Z({W})) = D_{window \ supp W}^c
    // with D_J = {Q : J not in Q}; so the preimage is {Q : supp(W)^c in Q}.
    ZariskiClosedSet via_preimage;
    for (auto m : model.points)
      if (phi(w, m).contains(supp.complement()))
        via_preimage.push_back(psi(PrimePoint{m.a}));
    if (z != via_preimage) return false;
  }
  return true;
}

}  // namespace azrep
