#pragma once

#include <random>
#include <string>

#include "azrep/barcode.hpp"
#include "azrep/rep.hpp"

namespace azrep {

using Rng = std::mt19937_64;

inline int rand_int(Rng& g, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  return d(g);
}

inline std::string random_orientation(Rng& g, int len) {
  std::string s;
  for (int i = 0; i < len; ++i) s += rand_int(g, 0, 1) ? 'R' : 'L';
  return s;
}

// Orientation word whose longest equal-symbol run is at most max_run.
inline std::string random_orientation_bounded(Rng& g, int len, int max_run) {
  std::string s;
  int run = 0;
  char last = 0;
  for (int i = 0; i < len; ++i) {
    char c;
    if (run >= max_run)
      c = last == 'R' ? 'L' : 'R';
    else
      c = rand_int(g, 0, 1) ? 'R' : 'L';
    run = (c == last) ? run + 1 : 1;
    last = c;
    s += c;
  }
  return s;
}

inline VertexSet random_subset(Rng& g, int lo, int hi) {
  VertexSet s(lo, hi);
  for (int v = lo; v <= hi; ++v)
    if (rand_int(g, 0, 1)) s.insert(v);
  return s;
}

inline Barcode random_barcode(Rng& g, const QuiverWindow& w, int max_bars,
                              int max_mult) {
  Barcode bc;
  int n = rand_int(g, 0, max_bars);
  for (int i = 0; i < n; ++i) {
    int a = rand_int(g, w.lo, w.hi);
    int b = rand_int(g, a, w.hi);
    bc.add({a, b}, rand_int(g, 1, max_mult));
  }
  return bc;
}

// Assembled from a random barcode and conjugated by random invertible
// matrices: a generic representative of its isomorphism class.
template <class F>
Representation<F> random_rep(Rng& g, const QuiverWindow& w, F f, int max_bars,
                             int max_mult) {
  return base_change(assemble(w, random_barcode(g, w, max_bars, max_mult), f),
                     g());
}

// Basis of the morphism space Hom(a, b): one unknown per entry of every
// component, one equation per entry of every commuting square.
template <class F>
std::vector<Morphism<F>> hom_basis(const Representation<F>& a,
                                   const Representation<F>& b) {
  require_same_window(a, b);
  const auto& w = a.window;
  F f = a.field;
  std::vector<int> off(w.size() + 1, 0);
  for (int i = 0; i < w.size(); ++i)
    off[i + 1] = off[i] + b.dims[i] * a.dims[i];
  int unknowns = off[w.size()];

  int eqs = 0;
  for (int k = 0; k < w.num_arrows(); ++k) {
    int s = w.arrow_source(k), t = w.arrow_target(k);
    eqs += b.dim_at(t) * a.dim_at(s);
  }
  Matrix<F> sys(f, eqs, unknowns);
  // unknown index for entry (i,j) of component at vertex v
  auto ux = [&](int v, int i, int j) {
    return off[v - w.lo] + i * a.dim_at(v) + j;
  };
  int row = 0;
  for (int k = 0; k < w.num_arrows(); ++k) {
    int s = w.arrow_source(k), t = w.arrow_target(k);
    // f_t A_k - B_k f_s = 0, entry (i, j)
    for (int i = 0; i < b.dim_at(t); ++i)
      for (int j = 0; j < a.dim_at(s); ++j) {
        for (int l = 0; l < a.dim_at(t); ++l)
          sys.at(row, ux(t, i, l)) =
              f.add(sys.at(row, ux(t, i, l)), a.maps[k].at(l, j));
        for (int l = 0; l < b.dim_at(s); ++l)
          sys.at(row, ux(s, l, j)) =
              f.sub(sys.at(row, ux(s, l, j)), b.maps[k].at(i, l));
        ++row;
      }
  }
  auto basis = kernel_basis(sys);
  std::vector<Morphism<F>> out;
  for (int c = 0; c < basis.cols(); ++c) {
    Morphism<F> m{a, b, {}};
    for (int v = w.lo; v <= w.hi; ++v) {
      Matrix<F> comp(f, b.dim_at(v), a.dim_at(v));
      for (int i = 0; i < b.dim_at(v); ++i)
        for (int j = 0; j < a.dim_at(v); ++j)
          comp.at(i, j) = basis.at(ux(v, i, j), c);
      m.components.push_back(std::move(comp));
    }
    out.push_back(std::move(m));
  }
  return out;
}

template <class F>
int hom_dim(const Representation<F>& a, const Representation<F>& b) {
  return static_cast<int>(hom_basis(a, b).size());
}

// Random element of the morphism space (small integer combination of the
// basis). May be zero or non-mono; callers filter as needed.
template <class F>
Morphism<F> random_morphism(Rng& g, const Representation<F>& a,
                            const Representation<F>& b) {
  auto basis = hom_basis(a, b);
  F f = a.field;
  Morphism<F> m{a, b, {}};
  const auto& w = a.window;
  for (int v = w.lo; v <= w.hi; ++v)
    m.components.emplace_back(f, b.dim_at(v), a.dim_at(v));
  for (auto& bm : basis) {
    auto c = f.from_int(rand_int(g, -3, 3));
    for (int v = 0; v < w.size(); ++v)
      for (int i = 0; i < m.components[v].rows(); ++i)
        for (int j = 0; j < m.components[v].cols(); ++j)
          m.components[v].at(i, j) =
              f.add(m.components[v].at(i, j),
                    f.mul(c, bm.components[v].at(i, j)));
  }
  return m;
}

}  // namespace azrep
