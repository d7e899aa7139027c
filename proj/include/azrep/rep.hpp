#pragma once

#include <utility>
#include <vector>

#include "azrep/matrix.hpp"
#include "azrep/quiver.hpp"

namespace azrep {

// A pointwise finite-dimensional representation on a window: one vector
// space dimension per vertex, one matrix per arrow (target x source).
template <class F>
struct Representation {
  QuiverWindow window;
  F field{};
  std::vector<int> dims;          // indexed by v - window.lo
  std::vector<Matrix<F>> maps;    // indexed by arrow position

  int dim_at(int v) const { return dims[v - window.lo]; }

  void validate() const {
    if (static_cast<int>(dims.size()) != window.size())
      throw std::invalid_argument("Representation: dims size mismatch");
    if (static_cast<int>(maps.size()) != window.num_arrows())
      throw std::invalid_argument("Representation: maps size mismatch");
    for (int k = 0; k < window.num_arrows(); ++k) {
      if (maps[k].rows() != dim_at(window.arrow_target(k)) ||
          maps[k].cols() != dim_at(window.arrow_source(k)))
        throw std::invalid_argument("Representation: map shape mismatch");
    }
  }

  bool operator==(const Representation& o) const {
    return window == o.window && field == o.field && dims == o.dims &&
           maps == o.maps;
  }
};

template <class F>
struct Morphism {
  Representation<F> source;
  Representation<F> target;
  std::vector<Matrix<F>> components;  // per vertex, target-dim x source-dim

  // Commuting squares f_t V_a = W_a f_s, checked exactly.
  bool is_valid() const {
    if (source.window != target.window) return false;
    if (static_cast<int>(components.size()) != source.window.size())
      return false;
    const auto& w = source.window;
    for (int v = w.lo; v <= w.hi; ++v) {
      const auto& c = components[v - w.lo];
      if (c.rows() != target.dim_at(v) || c.cols() != source.dim_at(v))
        return false;
    }
    for (int k = 0; k < w.num_arrows(); ++k) {
      int s = w.arrow_source(k), t = w.arrow_target(k);
      if (!(components[t - w.lo] * source.maps[k] ==
            target.maps[k] * components[s - w.lo]))
        return false;
    }
    return true;
  }
};

template <class F>
Representation<F> zero_rep(const QuiverWindow& w, F f) {
  Representation<F> r{w, f, std::vector<int>(w.size(), 0), {}};
  for (int k = 0; k < w.num_arrows(); ++k)
    r.maps.emplace_back(f, 0, 0);
  return r;
}

// K_S: dimension 1 on S, identity on arrows interior to a connected
// component, 0 elsewhere. Disconnected S gives the direct sum of the
// interval representations of its components.
template <class F>
Representation<F> interval_rep(const QuiverWindow& w, const VertexSet& s, F f) {
  if (s.lo != w.lo || s.hi != w.hi)
    throw std::invalid_argument("interval_rep: set not on window");
  Representation<F> r{w, f, std::vector<int>(w.size(), 0), {}};
  for (int v = w.lo; v <= w.hi; ++v)
    if (s.contains(v)) r.dims[v - w.lo] = 1;
  for (int k = 0; k < w.num_arrows(); ++k) {
    bool interior = s.contains(w.lo + k) && s.contains(w.lo + k + 1);
    Matrix<F> m(f, r.dim_at(w.arrow_target(k)), r.dim_at(w.arrow_source(k)));
    if (interior) m.at(0, 0) = f.one();
    r.maps.push_back(std::move(m));
  }
  return r;
}

// Tensor unit: K on every vertex, identities on every arrow.
template <class F>
Representation<F> unit_rep(const QuiverWindow& w, F f) {
  return interval_rep(w, VertexSet::all(w.lo, w.hi), f);
}

// K'_window: K on every vertex, zero on every arrow.
template <class F>
Representation<F> dust_rep(const QuiverWindow& w, F f) {
  Representation<F> r{w, f, std::vector<int>(w.size(), 1), {}};
  for (int k = 0; k < w.num_arrows(); ++k)
    r.maps.emplace_back(f, 1, 1);
  return r;
}

template <class F>
VertexSet support(const Representation<F>& v) {
  VertexSet s(v.window.lo, v.window.hi);
  for (int a = v.window.lo; a <= v.window.hi; ++a)
    if (v.dim_at(a) > 0) s.insert(a);
  return s;
}

template <class F>
void require_same_window(const Representation<F>& a,
                         const Representation<F>& b) {
  if (a.window != b.window)
    throw std::invalid_argument("representations on different windows");
}

template <class F>
Representation<F> direct_sum(const Representation<F>& a,
                             const Representation<F>& b) {
  require_same_window(a, b);
  const auto& w = a.window;
  Representation<F> r{w, a.field, {}, {}};
  for (int i = 0; i < w.size(); ++i) r.dims.push_back(a.dims[i] + b.dims[i]);
  for (int k = 0; k < w.num_arrows(); ++k) {
    int s = w.arrow_source(k), t = w.arrow_target(k);
    Matrix<F> m(a.field, r.dim_at(t), r.dim_at(s));
    for (int i = 0; i < a.dim_at(t); ++i)
      for (int j = 0; j < a.dim_at(s); ++j) m.at(i, j) = a.maps[k].at(i, j);
    for (int i = 0; i < b.dim_at(t); ++i)
      for (int j = 0; j < b.dim_at(s); ++j)
        m.at(a.dim_at(t) + i, a.dim_at(s) + j) = b.maps[k].at(i, j);
    r.maps.push_back(std::move(m));
  }
  return r;
}

// Pointwise tensor: dims multiply, arrow maps are Kronecker products.
template <class F>
Representation<F> tensor(const Representation<F>& a,
                         const Representation<F>& b) {
  require_same_window(a, b);
  const auto& w = a.window;
  Representation<F> r{w, a.field, {}, {}};
  for (int i = 0; i < w.size(); ++i) r.dims.push_back(a.dims[i] * b.dims[i]);
  for (int k = 0; k < w.num_arrows(); ++k)
    r.maps.push_back(a.maps[k].kron(b.maps[k]));
  return r;
}

template <class F>
bool is_mono(const Morphism<F>& f) {
  for (const auto& c : f.components)
    if (rank(c) != c.cols()) return false;
  return true;
}

template <class F>
bool is_epi(const Morphism<F>& f) {
  for (const auto& c : f.components)
    if (rank(c) != c.rows()) return false;
  return true;
}

// Pointwise kernel with induced arrow maps; returns (Ker f, inclusion).
template <class F>
std::pair<Representation<F>, Morphism<F>> kernel(const Morphism<F>& f) {
  if (!f.is_valid()) throw std::invalid_argument("kernel: invalid morphism");
  const auto& w = f.source.window;
  F fld = f.source.field;
  std::vector<Matrix<F>> bases;   // columns span ker f_a
  Representation<F> ker{w, fld, {}, {}};
  for (int v = w.lo; v <= w.hi; ++v) {
    bases.push_back(kernel_basis(f.components[v - w.lo]));
    ker.dims.push_back(bases.back().cols());
  }
  for (int k = 0; k < w.num_arrows(); ++k) {
    int s = w.arrow_source(k), t = w.arrow_target(k);
    // V_a maps ker f_s into ker f_t; solve for the restriction.
    auto x = solve(bases[t - w.lo], f.source.maps[k] * bases[s - w.lo]);
    if (!x) throw std::logic_error("kernel: restriction not solvable");
    ker.maps.push_back(std::move(*x));
  }
  Morphism<F> incl{ker, f.source, std::move(bases)};
  return {ker, incl};
}

// Pointwise cokernel with induced maps; returns (Coker f, projection).
template <class F>
std::pair<Representation<F>, Morphism<F>> cokernel(const Morphism<F>& f) {
  if (!f.is_valid()) throw std::invalid_argument("cokernel: invalid morphism");
  const auto& w = f.target.window;
  F fld = f.target.field;
  std::vector<Matrix<F>> projs;
  Representation<F> cok{w, fld, {}, {}};
  for (int v = w.lo; v <= w.hi; ++v) {
    projs.push_back(cokernel_projection(f.components[v - w.lo]));
    cok.dims.push_back(projs.back().rows());
  }
  for (int k = 0; k < w.num_arrows(); ++k) {
    int s = w.arrow_source(k), t = w.arrow_target(k);
    // Induced map Y with Y q_s = q_t W_a; solve the transposed system.
    auto rhs = (projs[t - w.lo] * f.target.maps[k]).transpose();
    auto y = solve(projs[s - w.lo].transpose(), rhs);
    if (!y) throw std::logic_error("cokernel: induced map not solvable");
    cok.maps.push_back(y->transpose());
  }
  Morphism<F> proj{f.target, cok, std::move(projs)};
  return {cok, proj};
}

// Middle object of an extension 0 -> v1 -> E -> v2 -> 0 with arrow maps
// [[v1_a, eps_a], [0, v2_a]]. Any eps of the right shapes works: quiver
// representations carry no relations.
template <class F>
struct ExtensionResult {
  Representation<F> middle;
  Morphism<F> inclusion;   // v1 -> middle
  Morphism<F> projection;  // middle -> v2
};

template <class F>
ExtensionResult<F> extension(const Representation<F>& v1,
                             const Representation<F>& v2,
                             const std::vector<Matrix<F>>& eps) {
  require_same_window(v1, v2);
  const auto& w = v1.window;
  F f = v1.field;
  if (static_cast<int>(eps.size()) != w.num_arrows())
    throw std::invalid_argument("extension: eps size mismatch");
  Representation<F> mid{w, f, {}, {}};
  for (int i = 0; i < w.size(); ++i) mid.dims.push_back(v1.dims[i] + v2.dims[i]);
  for (int k = 0; k < w.num_arrows(); ++k) {
    int s = w.arrow_source(k), t = w.arrow_target(k);
    if (eps[k].rows() != v1.dim_at(t) || eps[k].cols() != v2.dim_at(s))
      throw std::invalid_argument("extension: eps shape mismatch");
    Matrix<F> m(f, mid.dim_at(t), mid.dim_at(s));
    for (int i = 0; i < v1.dim_at(t); ++i) {
      for (int j = 0; j < v1.dim_at(s); ++j) m.at(i, j) = v1.maps[k].at(i, j);
      for (int j = 0; j < v2.dim_at(s); ++j)
        m.at(i, v1.dim_at(s) + j) = eps[k].at(i, j);
    }
    for (int i = 0; i < v2.dim_at(t); ++i)
      for (int j = 0; j < v2.dim_at(s); ++j)
        m.at(v1.dim_at(t) + i, v1.dim_at(s) + j) = v2.maps[k].at(i, j);
    mid.maps.push_back(std::move(m));
  }
  Morphism<F> incl{v1, mid, {}};
  Morphism<F> proj{mid, v2, {}};
  for (int v = w.lo; v <= w.hi; ++v) {
    Matrix<F> ic(f, mid.dim_at(v), v1.dim_at(v));
    for (int i = 0; i < v1.dim_at(v); ++i) ic.at(i, i) = f.one();
    incl.components.push_back(std::move(ic));
    Matrix<F> pc(f, v2.dim_at(v), mid.dim_at(v));
    for (int i = 0; i < v2.dim_at(v); ++i) pc.at(i, v1.dim_at(v) + i) = f.one();
    proj.components.push_back(std::move(pc));
  }
  return {mid, incl, proj};
}

// Zero-eps convenience (split extension = direct sum with block maps).
template <class F>
ExtensionResult<F> split_extension(const Representation<F>& v1,
                                   const Representation<F>& v2) {
  std::vector<Matrix<F>> eps;
  const auto& w = v1.window;
  for (int k = 0; k < w.num_arrows(); ++k)
    eps.emplace_back(v1.field, v1.dim_at(w.arrow_target(k)),
                     v2.dim_at(w.arrow_source(k)));
  return extension(v1, v2, eps);
}

// Endomorphism of x with pointwise nullity exactly 1; requires all arrow
// maps of x zero and dims >= 1 everywhere. Its kernel is K'_window.
template <class F>
Morphism<F> kernel_rank_one(const Representation<F>& x) {
  const auto& w = x.window;
  F f = x.field;
  for (int k = 0; k < w.num_arrows(); ++k)
    if (!x.maps[k].is_zero())
      throw std::invalid_argument("kernel_rank_one: arrow maps must be zero");
  Morphism<F> m{x, x, {}};
  for (int v = w.lo; v <= w.hi; ++v) {
    int d = x.dim_at(v);
    if (d < 1)
      throw std::invalid_argument("kernel_rank_one: dims must be >= 1");
    // Down-shift matrix: rank d-1, nullity 1.
    Matrix<F> c(f, d, d);
    for (int i = 1; i < d; ++i) c.at(i, i - 1) = f.one();
    m.components.push_back(std::move(c));
  }
  return m;
}

}  // namespace azrep
