#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "azrep/barcode.hpp"
#include "azrep/rep.hpp"

namespace azrep {

// Interval with possibly infinite endpoints: nullopt a = -inf, nullopt b =
// +inf. Used for the symbolic (whole-line, rightward-oriented) side.
struct ExtendedInterval {
  std::optional<int> a;
  std::optional<int> b;

  ExtendedInterval() = default;
  ExtendedInterval(std::optional<int> a_, std::optional<int> b_) : a(a_), b(b_) {
    if (a && b && *a > *b)
      throw std::invalid_argument("ExtendedInterval: a > b");
  }
  static ExtendedInterval whole_line() { return {std::nullopt, std::nullopt}; }
  static ExtendedInterval finite(int x, int y) { return {x, y}; }

  bool finite_a() const { return a.has_value(); }
  bool finite_b() const { return b.has_value(); }
  bool bounded() const { return finite_a() && finite_b(); }
  bool length_zero() const { return bounded() && *a == *b; }

  // set containment, infinity-aware
  bool contained_in(const ExtendedInterval& o) const {
    bool left_ok = !o.a || (a && *o.a <= *a);
    bool right_ok = !o.b || (b && *b <= *o.b);
    return left_ok && right_ok;
  }
  std::optional<ExtendedInterval> intersect(const ExtendedInterval& o) const {
    std::optional<int> lo = a;
    if (o.a && (!lo || *o.a > *lo)) lo = o.a;
    std::optional<int> hi = b;
    if (o.b && (!hi || *o.b < *hi)) hi = o.b;
    if (lo && hi && *lo > *hi) return std::nullopt;
    return ExtendedInterval{lo, hi};
  }
  bool operator==(const ExtendedInterval&) const = default;
};

// Arithmetic progression {offset + k*period} clipped to [lo, hi] (either
// side may be open). Each member contributes one length-0 bar.
struct Dust {
  int offset = 0;
  int period = 1;
  std::optional<int> lo;
  std::optional<int> hi;

  Dust() = default;
  Dust(int off, int per, std::optional<int> l = std::nullopt,
       std::optional<int> h = std::nullopt)
      : offset(off), period(per), lo(l), hi(h) {
    if (period < 1) throw std::invalid_argument("Dust: period < 1");
    offset = ((offset % period) + period) % period;
  }
  bool contains(int x) const {
    if (lo && x < *lo) return false;
    if (hi && x > *hi) return false;
    return ((x - offset) % period + period) % period == 0;
  }
  bool empty() const {
    if (!lo || !hi) return false;
    for (int x = *lo; x <= *hi; ++x)
      if (contains(x)) return false;
    return true;
  }
  bool finite() const { return lo && hi; }
  // every member of this lies in o's progression and clip
  bool sub_progression_of(const Dust& o) const {
    if (period % o.period != 0) {
      // still fine if this is finite and all points land in o
      if (!finite()) return false;
      for (int x = *lo; x <= *hi; ++x)
        if (contains(x) && !o.contains(x)) return false;
      return true;
    }
    if (((offset - o.offset) % o.period + o.period) % o.period != 0) {
      if (!finite()) return false;
      for (int x = *lo; x <= *hi; ++x)
        if (contains(x) && !o.contains(x)) return false;
      return true;
    }
    bool left_ok = !o.lo || (lo && *o.lo <= *lo);
    bool right_ok = !o.hi || (hi && *hi <= *o.hi);
    if (left_ok && right_ok) return true;
    if (!finite()) return false;
    for (int x = *lo; x <= *hi; ++x)
      if (contains(x) && !o.contains(x)) return false;
    return true;
  }
  bool operator==(const Dust&) const = default;
};

// Barcode template for objects on the whole line: finitely many explicit
// bars plus periodic dust components (families of length-0 bars), e.g.
// K'_line = dust(offset 0, period 1).
struct SymbolicBarcode {
  std::vector<ExtendedInterval> bars;
  std::vector<Dust> dust;

  static SymbolicBarcode zero() { return {}; }
  static SymbolicBarcode whole_line_bar() {
    return {{ExtendedInterval::whole_line()}, {}};
  }
  static SymbolicBarcode full_dust() { return {{}, {Dust{0, 1}}}; }

  bool operator==(const SymbolicBarcode&) const = default;
};

// Dust bars have length 0, so only explicit bars can be unbounded.
inline bool is_bounded(const SymbolicBarcode& b) {
  for (const auto& bar : b.bars)
    if (!bar.bounded()) return false;
  return true;
}

namespace detail {

// Intersection of two progressions by CRT; empty when residues clash.
inline std::optional<Dust> dust_meet(const Dust& x, const Dust& y) {
  long long g = std::gcd(x.period, y.period);
  if (((x.offset - y.offset) % g + g) % g != 0) return std::nullopt;
  long long l = static_cast<long long>(x.period) / g * y.period;
  // find the smallest nonnegative solution by stepping x's progression
  long long off = x.offset;
  while (((off - y.offset) % y.period + y.period) % y.period != 0)
    off += x.period;
  Dust r(static_cast<int>(off % l), static_cast<int>(l));
  r.lo = x.lo;
  if (y.lo && (!r.lo || *y.lo > *r.lo)) r.lo = y.lo;
  r.hi = x.hi;
  if (y.hi && (!r.hi || *y.hi < *r.hi)) r.hi = y.hi;
  if (r.lo && r.hi && *r.lo > *r.hi) return std::nullopt;
  return r;
}

inline std::optional<Dust> dust_clip(const Dust& d, const ExtendedInterval& i) {
  Dust r = d;
  if (i.a && (!r.lo || *i.a > *r.lo)) r.lo = i.a;
  if (i.b && (!r.hi || *i.b < *r.hi)) r.hi = i.b;
  if (r.lo && r.hi && *r.lo > *r.hi) return std::nullopt;
  return r;
}

}  // namespace detail

// Tensor of interval sums is the sum of pairwise intersections; dust
// components intersect bars by clipping and each other by CRT.
inline SymbolicBarcode symbolic_tensor(const SymbolicBarcode& x,
                                       const SymbolicBarcode& y) {
  SymbolicBarcode r;
  for (const auto& i : x.bars)
    for (const auto& j : y.bars)
      if (auto m = i.intersect(j)) r.bars.push_back(*m);
  for (const auto& d : x.dust)
    for (const auto& j : y.bars)
      if (auto m = detail::dust_clip(d, j)) r.dust.push_back(*m);
  for (const auto& i : x.bars)
    for (const auto& d : y.dust)
      if (auto m = detail::dust_clip(d, i)) r.dust.push_back(*m);
  for (const auto& d : x.dust)
    for (const auto& e : y.dust)
      if (auto m = detail::dust_meet(d, e)) r.dust.push_back(*m);
  return r;
}

// Hom dimension between interval representations of the rightward-oriented
// line: nonzero exactly when the target interval overlaps the source's left
// end from the left, i.e. j.a <= i.a <= j.b <= i.b.
inline int hom_dim_linear(const ExtendedInterval& i, const ExtendedInterval& j) {
  auto le = [](const std::optional<int>& x, const std::optional<int>& y,
               bool x_minus_inf, bool y_minus_inf) {
    // compare with the convention given by the flags
    long long xv = x ? *x : (x_minus_inf ? -(1LL << 40) : (1LL << 40));
    long long yv = y ? *y : (y_minus_inf ? -(1LL << 40) : (1LL << 40));
    return xv <= yv;
  };
  bool c1 = le(j.a, i.a, true, true);
  bool c2 = le(i.a, j.b, true, false);
  bool c3 = le(j.b, i.b, false, false);
  return (c1 && c2 && c3) ? 1 : 0;
}

// Verdict of a lemma-shaped check; `pairs` lists the witnessing containments.
struct ContainmentVerdict {
  bool applicable = false;  // the morphism was mono (resp. epi)
  bool ok = true;
  std::vector<std::pair<Interval, Interval>> pairs;
  std::string detail;
};

// Mono f: V -> W forces every bar of V to sit inside a bar of W; epi forces
// every bar of W inside a bar of V. Checked on actual windowed morphisms.
template <class F>
ContainmentVerdict mono_containment_check(const Morphism<F>& f) {
  ContainmentVerdict v;
  if (!f.is_valid()) {
    v.ok = false;
    v.detail = "invalid morphism";
    return v;
  }
  bool mono = is_mono(f), epi = is_epi(f);
  if (!mono && !epi) return v;  // vacuous
  v.applicable = true;
  auto check_dir = [&](const Representation<F>& small,
                       const Representation<F>& big) {
    auto bs = decompose(small), bb = decompose(big);
    for (auto& [bar, mult] : bs.bars) {
      (void)mult;
      bool found = false;
      for (auto& [cand, m2] : bb.bars) {
        (void)m2;
        if (cand.a <= bar.a && bar.b <= cand.b) {
          v.pairs.push_back({bar, cand});
          found = true;
          break;
        }
      }
      if (!found) {
        v.ok = false;
        v.detail = "bar [" + std::to_string(bar.a) + "," +
                   std::to_string(bar.b) + "] has no containing bar";
        return;
      }
    }
  };
  if (mono) check_dir(f.source, f.target);
  if (v.ok && epi) check_dir(f.target, f.source);
  return v;
}

// Mono V -> W (resp. epi) makes V (resp. W) a direct summand of V (x) W,
// verified as barcode sub-multiset containment.
template <class F>
ContainmentVerdict direct_summand_of_tensor_check(const Morphism<F>& f) {
  ContainmentVerdict v;
  if (!f.is_valid()) {
    v.ok = false;
    v.detail = "invalid morphism";
    return v;
  }
  bool mono = is_mono(f), epi = is_epi(f);
  if (!mono && !epi) return v;
  v.applicable = true;
  auto prod = decompose(tensor(f.source, f.target));
  if (mono && !prod.contains(decompose(f.source))) {
    v.ok = false;
    v.detail = "tensor barcode does not contain the source barcode";
  }
  if (v.ok && epi && !prod.contains(decompose(f.target))) {
    v.ok = false;
    v.detail = "tensor barcode does not contain the target barcode";
  }
  return v;
}

// Windowed proxy for the bounded-extension lemma: the window's right edge
// stands in for +inf. Inputs must keep away from the edge; the middle of
// any extension must too.
template <class F>
ContainmentVerdict bounded_extension_check(const Representation<F>& v1,
                                           const Representation<F>& v2,
                                           const std::vector<Matrix<F>>& eps) {
  ContainmentVerdict v;
  int edge = v1.window.hi;
  auto touches = [&](const Representation<F>& r) {
    for (auto& [bar, mult] : decompose(r).bars) {
      (void)mult;
      if (bar.b >= edge) return true;
    }
    return false;
  };
  if (touches(v1) || touches(v2)) {
    v.detail = "input bar touches the infinity edge";
    v.ok = false;
    return v;
  }
  v.applicable = true;
  auto ext = extension(v1, v2, eps);
  if (touches(ext.middle)) {
    v.ok = false;
    v.detail = "middle bar touches the infinity edge";
  }
  return v;
}

// --- derivation certificates ---------------------------------------------

enum class CertOp { Tensor, Ext, Ker, Coker };

struct CertStep {
  CertOp op;
  std::vector<int> args;  // indices: < #seeds refer to seeds, rest to steps
  SymbolicBarcode claim;
};

struct DerivationCertificate {
  std::vector<SymbolicBarcode> seeds;
  std::vector<CertStep> steps;
};

struct CertVerdict {
  bool ok = true;
  int step = -1;  // failing step index (or -1)
  std::string reason;
};

namespace detail {

// A bar is accounted for by a symbolic object when it sits inside one of
// the object's bars, or is a single dust point.
inline bool bar_covered(const ExtendedInterval& bar, const SymbolicBarcode& by) {
  for (const auto& b : by.bars)
    if (bar.contained_in(b)) return true;
  if (bar.length_zero())
    for (const auto& d : by.dust)
      if (d.contains(*bar.a)) return true;
  return false;
}

inline bool dust_covered(const Dust& d, const SymbolicBarcode& by) {
  for (const auto& e : by.dust)
    if (d.sub_progression_of(e)) return true;
  if (d.finite()) {
    for (int x = *d.lo; x <= *d.hi; ++x) {
      if (!d.contains(x)) continue;
      if (!bar_covered(ExtendedInterval::finite(x, x), by)) return false;
    }
    return true;
  }
  return false;
}

inline bool covered_by(const SymbolicBarcode& claim, const SymbolicBarcode& by) {
  for (const auto& b : claim.bars)
    if (!bar_covered(b, by)) return false;
  for (const auto& d : claim.dust)
    if (!dust_covered(d, by)) return false;
  return true;
}

}  // namespace detail

// Inductive boundedness audit. Seeds must be bounded; tensor and
// kernel/cokernel claims must be covered by the relevant operand (so they
// can only shrink); extension claims must be bounded outright. An accepted
// certificate therefore never reaches an unbounded object such as K_line.
inline CertVerdict check_derivation(const DerivationCertificate& cert) {
  CertVerdict v;
  auto fail = [&](int step, std::string why) {
    v.ok = false;
    v.step = step;
    v.reason = std::move(why);
    return v;
  };
  int ns = static_cast<int>(cert.seeds.size());
  for (int i = 0; i < ns; ++i)
    if (!is_bounded(cert.seeds[i]))
      return fail(-1, "seed " + std::to_string(i) + " is unbounded");

  auto object_at = [&](int idx) -> const SymbolicBarcode& {
    return idx < ns ? cert.seeds[idx] : cert.steps[idx - ns].claim;
  };
  for (int s = 0; s < static_cast<int>(cert.steps.size()); ++s) {
    const auto& st = cert.steps[s];
    std::size_t want = st.op == CertOp::Tensor ? 1 : 2;
    if (st.args.size() != want) return fail(s, "wrong arg count");
    for (int a : st.args)
      if (a < 0 || a >= ns + s) return fail(s, "forward or bad reference");
    switch (st.op) {
      case CertOp::Tensor:
        // with arbitrary second factor: result is a sub-object of arg
        if (!detail::covered_by(st.claim, object_at(st.args[0])))
          return fail(s, "tensor claim not covered by its operand");
        break;
      case CertOp::Ext:
        if (!is_bounded(st.claim))
          return fail(s, "extension claim is unbounded");
        break;
      case CertOp::Ker:
        if (!detail::covered_by(st.claim, object_at(st.args[0])))
          return fail(s, "kernel claim not covered by the source");
        break;
      case CertOp::Coker:
        if (!detail::covered_by(st.claim, object_at(st.args[1])))
          return fail(s, "cokernel claim not covered by the target");
        break;
    }
    if (!is_bounded(st.claim))
      return fail(s, "claim is unbounded");  // safety net; implied above
  }
  return v;
}

}  // namespace azrep
