#pragma once

#include <map>
#include <random>
#include <sstream>
#include <string>

#include "azrep/rep.hpp"

namespace azrep {

struct Interval {
  int a = 0;
  int b = 0;
  auto operator<=>(const Interval&) const = default;
};

// Multiset of intervals; the complete isomorphism invariant of a windowed
// representation by the interval-decomposition theorem.
struct Barcode {
  std::map<Interval, int> bars;

  void add(Interval i, int mult = 1) {
    if (mult == 0) return;
    bars[i] += mult;
    if (bars[i] == 0) bars.erase(i);
  }
  int mult(Interval i) const {
    auto it = bars.find(i);
    return it == bars.end() ? 0 : it->second;
  }
  int total_bars() const {
    int n = 0;
    for (auto& [i, m] : bars) n += m;
    return n;
  }
  bool operator==(const Barcode&) const = default;

  // Sub-multiset containment.
  bool contains(const Barcode& o) const {
    for (auto& [i, m] : o.bars)
      if (mult(i) < m) return false;
    return true;
  }
};

// Rank of the canonical map from the limit of v restricted to [a,b] to its
// colimit. For an interval-decomposable v this counts summands K_I with
// [a,b] contained in I.
template <class F>
int rank_invariant(const Representation<F>& v, int a, int b) {
  const auto& w = v.window;
  if (a < w.lo || b > w.hi || a > b)
    throw std::invalid_argument("rank_invariant: range outside window");
  F f = v.field;
  int len = b - a + 1;
  std::vector<int> offset(len + 1, 0);
  for (int i = 0; i < len; ++i) offset[i + 1] = offset[i] + v.dim_at(a + i);
  int total = offset[len];
  if (total == 0) return 0;

  // Limit: kernel of the constraint matrix with one block row per arrow
  // enforcing x_t - V_k x_s = 0.
  int carrows = 0;
  for (int k = a - w.lo; k < b - w.lo; ++k) carrows += v.maps[k].rows();
  Matrix<F> constraint(f, carrows, total);
  int row = 0;
  for (int k = a - w.lo; k < b - w.lo; ++k) {
    int s = w.arrow_source(k) - a, t = w.arrow_target(k) - a;
    const auto& m = v.maps[k];
    for (int i = 0; i < m.rows(); ++i) {
      constraint.at(row + i, offset[t] + i) = f.one();
      for (int j = 0; j < m.cols(); ++j)
        constraint.at(row + i, offset[s] + j) =
            f.sub(constraint.at(row + i, offset[s] + j), m.at(i, j));
    }
    row += m.rows();
  }
  Matrix<F> lim = kernel_basis(constraint);
  if (lim.cols() == 0) return 0;

  // Colimit: quotient of the total space by span{i_s x - i_t V_k x}.
  int rcols = 0;
  for (int k = a - w.lo; k < b - w.lo; ++k) rcols += v.maps[k].cols();
  Matrix<F> rel(f, total, rcols);
  int col = 0;
  for (int k = a - w.lo; k < b - w.lo; ++k) {
    int s = w.arrow_source(k) - a, t = w.arrow_target(k) - a;
    const auto& m = v.maps[k];
    for (int j = 0; j < m.cols(); ++j) {
      rel.at(offset[s] + j, col + j) = f.one();
      for (int i = 0; i < m.rows(); ++i)
        rel.at(offset[t] + i, col + j) =
            f.sub(rel.at(offset[t] + i, col + j), m.at(i, j));
    }
    col += m.cols();
  }
  Matrix<F> q = cokernel_projection(rel);

  // The canonical map sends a compatible family to the class of its
  // component at a (any component gives the same class).
  Matrix<F> comp_a(f, total, total);
  for (int j = 0; j < v.dim_at(a); ++j) comp_a.at(j, j) = f.one();
  return rank(q * (comp_a * lim));
}

// Direct sum over bars of interval representations.
template <class F>
Representation<F> assemble(const QuiverWindow& w, const Barcode& bc, F f) {
  Representation<F> r = zero_rep(w, f);
  for (auto& [iv, m] : bc.bars) {
    if (iv.a < w.lo || iv.b > w.hi || iv.a > iv.b)
      throw std::invalid_argument("assemble: bar outside window");
    auto k = interval_rep(w, VertexSet::range(w.lo, w.hi, iv.a, iv.b), f);
    for (int c = 0; c < m; ++c) r = direct_sum(r, k);
  }
  return r;
}

// Interval decomposition by inclusion-exclusion over the rank invariant.
template <class F>
Barcode decompose(const Representation<F>& v) {
  const auto& w = v.window;
  // Cache r(a,b); out-of-window index means 0.
  int n = w.size();
  std::vector<std::vector<int>> r(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) r[i][j] = rank_invariant(v, w.lo + i, w.lo + j);
  auto rr = [&](int i, int j) {
    return (i < 0 || j >= n) ? 0 : r[i][j];
  };
  Barcode bc;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      int m = rr(i, j) - rr(i - 1, j) - rr(i, j + 1) + rr(i - 1, j + 1);
      if (m < 0)
        throw std::logic_error("decompose: negative multiplicity (bug)");
      if (m > 0) bc.add({w.lo + i, w.lo + j}, m);
    }
  // Dimension-sum invariant.
  for (int vx = 0; vx < n; ++vx) {
    int sum = 0;
    for (auto& [iv, m] : bc.bars)
      if (iv.a <= w.lo + vx && w.lo + vx <= iv.b) sum += m;
    if (sum != v.dims[vx])
      throw std::logic_error("decompose: dimension sum mismatch (bug)");
  }
  return bc;
}

// Conjugate all arrow maps by random invertible base changes per vertex;
// the result is isomorphic to v.
template <class F>
Representation<F> base_change(const Representation<F>& v, std::uint64_t seed) {
  const auto& w = v.window;
  F f = v.field;
  std::vector<Matrix<F>> p, pinv;
  for (int i = 0; i < w.size(); ++i) {
    p.push_back(random_invertible(f, v.dims[i], seed + 0x9e3779b97f4a7c15ull * (i + 1)));
    pinv.push_back(inverse(p.back()));
  }
  Representation<F> r = v;
  for (int k = 0; k < w.num_arrows(); ++k) {
    int s = w.arrow_source(k) - w.lo, t = w.arrow_target(k) - w.lo;
    r.maps[k] = p[t] * v.maps[k] * pinv[s];
  }
  return r;
}

// Barcode equality is the isomorphism test of the library.
template <class F>
bool isomorphic(const Representation<F>& a, const Representation<F>& b) {
  if (a.window != b.window) return false;
  return decompose(a) == decompose(b);
}

inline std::string ascii_bars(const Barcode& bc, int lo) {
  std::ostringstream out;
  for (auto& [iv, m] : bc.bars)
    for (int c = 0; c < m; ++c) {
      out << std::string(2 * (iv.a - lo), ' ') << iv.a;
      if (iv.b > iv.a) out << std::string(2 * (iv.b - iv.a) - 1, '-') << iv.b;
      out << '\n';
    }
  return out.str();
}

}  // namespace azrep
