#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "azrep/barcode.hpp"
#include "azrep/rep.hpp"

namespace azrep {

// Alternating sink/source labeling of a window: even labels are sinks t_i,
// odd labels are sources s_i, label 0 being the chosen base sink. Labels
// extend past the window edges by the alternating ghost continuation (every
// ghost vertex is critical), so the proof's set formulas clip cleanly.
struct SinkSourceLabeling {
  QuiverWindow window;
  std::map<int, int> label_to_pos;  // label -> vertex position (may be ghost)

  bool has(int label) const { return label_to_pos.count(label) > 0; }
  int pos(int label) const { return label_to_pos.at(label); }

  std::vector<int> sinks_in_window() const {
    std::vector<int> r;
    for (auto& [l, p] : label_to_pos)
      if (l % 2 == 0 && p >= window.lo && p <= window.hi) r.push_back(p);
    return r;
  }
  std::vector<int> sources_in_window() const {
    std::vector<int> r;
    for (auto& [l, p] : label_to_pos)
      if (l % 2 != 0 && p >= window.lo && p <= window.hi) r.push_back(p);
    return r;
  }
};

// Build the labeling: t_0 is the leftmost interior sink when one exists,
// otherwise the leftmost window sink; labels alternate outward in both
// directions over the critical vertices (window criticals plus a ghost
// margin where every vertex alternates).
inline SinkSourceLabeling sinks_and_sources(const QuiverWindow& w) {
  if (w.size() < 2)
    throw std::invalid_argument("sinks_and_sources: window has no arrows");
  constexpr int kGhost = 6;
  // role: +1 sink, -1 source, 0 neither; indexed by position.
  std::map<int, int> role;
  for (int v = w.lo; v <= w.hi; ++v)
    role[v] = w.is_sink(v) ? 1 : (w.is_source(v) ? -1 : 0);
  // Ghost continuation: boundary roles alternate outward with spacing 1.
  for (int g = 1; g <= kGhost; ++g) {
    role[w.hi + g] = (g % 2 == 0) ? role[w.hi] : -role[w.hi];
    role[w.lo - g] = (g % 2 == 0) ? role[w.lo] : -role[w.lo];
  }
  std::vector<std::pair<int, int>> crit;  // (pos, role), increasing pos
  for (auto& [p, r] : role)
    if (r != 0) crit.push_back({p, r});
  for (std::size_t i = 1; i < crit.size(); ++i)
    if (crit[i].second == crit[i - 1].second)
      throw std::logic_error("sinks_and_sources: alternation broken (bug)");

  int base = -1;
  for (std::size_t i = 0; i < crit.size(); ++i)
    if (crit[i].second == 1 && crit[i].first > w.lo && crit[i].first < w.hi) {
      base = static_cast<int>(i);
      break;
    }
  if (base < 0)
    for (std::size_t i = 0; i < crit.size(); ++i)
      if (crit[i].second == 1 && crit[i].first >= w.lo && crit[i].first <= w.hi) {
        base = static_cast<int>(i);
        break;
      }
  if (base < 0)
    throw std::invalid_argument("sinks_and_sources: no sink in window");

  SinkSourceLabeling lab{w, {}};
  for (std::size_t i = 0; i < crit.size(); ++i)
    lab.label_to_pos[static_cast<int>(i) - base] = crit[i].first;
  return lab;
}

// The proof's sets: B = U [s_{4i-1}, s_{4i+1}], D = U [s_{4i+1}, s_{4i+3}],
// C = U {s_{4i-1}, s_{4i+1}} = B intersect D, clipped to the window.
struct BdcSets {
  IntervalSet b, d, c;
};

inline BdcSets bdc_sets(const SinkSourceLabeling& lab) {
  const auto& w = lab.window;
  int n_sources = 0;
  for (auto& [l, p] : lab.label_to_pos)
    if (l % 2 != 0) ++n_sources;
  if (n_sources < 2)
    throw std::invalid_argument("bdc_sets: insufficient source labels");
  IntervalSet b(w.lo, w.hi), d(w.lo, w.hi), c(w.lo, w.hi);
  auto add_block = [&](IntervalSet& s, int la, int lb) {
    if (!lab.has(la) || !lab.has(lb)) return;
    for (int v = std::max(lab.pos(la), w.lo); v <= std::min(lab.pos(lb), w.hi);
         ++v)
      s.insert(v);
  };
  // Label range is bounded; sweep every i whose labels could exist.
  for (int i = -40; i <= 40; ++i) {
    add_block(b, 4 * i - 1, 4 * i + 1);
    add_block(d, 4 * i + 1, 4 * i + 3);
  }
  c = b.intersect(d);
  return {b, d, c};
}

// One saturation pass: layers[l] is the set of points added at step l+1.
struct SaturationTrace {
  IntervalSet result;
  std::vector<IntervalSet> layers;
};

// Grow each component rightward from its endpoint, one vertex per step,
// while the arrow points into the new vertex and the new vertex is not a
// sink. Reaches the fixpoint within max_path_length steps.
inline SaturationTrace saturate_right(const IntervalSet& b,
                                      const QuiverWindow& w) {
  SaturationTrace tr{b, {}};
  for (;;) {
    IntervalSet layer(w.lo, w.hi);
    for (auto& [a, c] : tr.result.components()) {
      (void)a;
      if (c < w.hi && w.orientation[c - w.lo] == 'R' && !w.is_sink(c + 1))
        layer.insert(c + 1);
    }
    if (layer.empty()) break;
    tr.result = tr.result.union_with(layer);
    tr.layers.push_back(layer);
  }
  return tr;
}

inline SaturationTrace saturate_left(const IntervalSet& b,
                                     const QuiverWindow& w) {
  SaturationTrace tr{b, {}};
  for (;;) {
    IntervalSet layer(w.lo, w.hi);
    for (auto& [a, c] : tr.result.components()) {
      (void)c;
      if (a > w.lo && w.orientation[a - 1 - w.lo] == 'L' && !w.is_sink(a - 1))
        layer.insert(a - 1);
    }
    if (layer.empty()) break;
    tr.result = tr.result.union_with(layer);
    tr.layers.push_back(layer);
  }
  return tr;
}

// --- Witness chains -------------------------------------------------------

template <class F>
struct JSeed {
  std::string note;
};
template <class F>
struct JTensorAbsorb {
  int member;                 // earlier step index
  Representation<F> factor;   // arbitrary object
};
template <class F>
struct JExtension {
  int sub, quot;
  std::vector<Matrix<F>> eps;
};
template <class F>
struct JKernelOf {
  int source, target;
  std::vector<Matrix<F>> components;  // the morphism between members
};
template <class F>
struct JCokernelOf {
  int source, target;
  std::vector<Matrix<F>> components;
};
template <class F>
struct JIsoReplace {
  int member;  // barcode-equal earlier member
};

template <class F>
using MembershipJustification =
    std::variant<JSeed<F>, JTensorAbsorb<F>, JExtension<F>, JKernelOf<F>,
                 JCokernelOf<F>, JIsoReplace<F>>;

template <class F>
struct WitnessStep {
  Representation<F> object;
  MembershipJustification<F> why;
  std::string note;
};

// Verified chain of membership deductions. The trunk derives K_C; the two
// branches realize the prime case split (K_B in M / K_D in M) and each must
// end at K_window.
template <class F>
struct WitnessChain {
  std::vector<WitnessStep<F>> trunk;
  std::vector<WitnessStep<F>> branch_b;
  std::vector<WitnessStep<F>> branch_d;

  // Branch seeds must multiply to the trunk's K_C member (the case split).
  int case_split_member = -1;
};

namespace detail {

template <class F>
bool check_step(const std::vector<const WitnessStep<F>*>& members,
                const WitnessStep<F>& step, std::string* err) {
  auto fail = [&](const std::string& m) {
    if (err) *err = m;
    return false;
  };
  auto member_rep = [&](int i) -> const Representation<F>& {
    return members.at(i)->object;
  };
  int n = static_cast<int>(members.size());
  return std::visit(
      [&](const auto& j) -> bool {
        using T = std::decay_t<decltype(j)>;
        if constexpr (std::is_same_v<T, JSeed<F>>) {
          return true;
        } else if constexpr (std::is_same_v<T, JTensorAbsorb<F>>) {
          if (j.member < 0 || j.member >= n) return fail("bad member index");
          auto prod = tensor(member_rep(j.member), j.factor);
          if (!(prod == step.object))
            return fail("tensor absorption does not produce the object");
          return true;
        } else if constexpr (std::is_same_v<T, JExtension<F>>) {
          if (j.sub < 0 || j.sub >= n || j.quot < 0 || j.quot >= n)
            return fail("bad member index");
          auto ext = extension(member_rep(j.sub), member_rep(j.quot), j.eps);
          if (!(ext.middle == step.object))
            return fail("extension middle does not match");
          if (!ext.inclusion.is_valid() || !ext.projection.is_valid())
            return fail("extension morphisms invalid");
          if (!is_mono(ext.inclusion) || !is_epi(ext.projection))
            return fail("extension not exact");
          // Pointwise exactness by rank arithmetic.
          const auto& w = step.object.window;
          for (int v = w.lo; v <= w.hi; ++v) {
            auto comp = ext.projection.components[v - w.lo] *
                        ext.inclusion.components[v - w.lo];
            if (!comp.is_zero()) return fail("extension: proj o incl != 0");
            if (member_rep(j.sub).dim_at(v) + member_rep(j.quot).dim_at(v) !=
                step.object.dim_at(v))
              return fail("extension: dims not additive");
          }
          return true;
        } else if constexpr (std::is_same_v<T, JKernelOf<F>>) {
          if (j.source < 0 || j.source >= n || j.target < 0 || j.target >= n)
            return fail("bad member index");
          Morphism<F> f{member_rep(j.source), member_rep(j.target),
                        j.components};
          if (!f.is_valid()) return fail("kernel-of morphism invalid");
          auto [ker, incl] = kernel(f);
          if (!(ker == step.object)) return fail("kernel does not match");
          if (!incl.is_valid() || !is_mono(incl))
            return fail("kernel inclusion invalid");
          return true;
        } else if constexpr (std::is_same_v<T, JCokernelOf<F>>) {
          if (j.source < 0 || j.source >= n || j.target < 0 || j.target >= n)
            return fail("bad member index");
          Morphism<F> f{member_rep(j.source), member_rep(j.target),
                        j.components};
          if (!f.is_valid()) return fail("cokernel-of morphism invalid");
          auto [cok, proj] = cokernel(f);
          if (!(cok == step.object)) return fail("cokernel does not match");
          if (!proj.is_valid() || !is_epi(proj))
            return fail("cokernel projection invalid");
          return true;
        } else if constexpr (std::is_same_v<T, JIsoReplace<F>>) {
          if (j.member < 0 || j.member >= n) return fail("bad member index");
          if (!isomorphic(member_rep(j.member), step.object))
            return fail("iso-replace objects not barcode-equal");
          return true;
        }
      },
      step.why);
}

template <class F>
bool check_branch(const WitnessChain<F>& ch,
                  const std::vector<WitnessStep<F>>& branch,
                  const Representation<F>& goal, std::string* err) {
  std::vector<const WitnessStep<F>*> members;
  for (auto& s : ch.trunk) members.push_back(&s);
  for (auto& s : branch) {
    if (!check_step<F>(members, s, err)) return false;
    members.push_back(&s);
  }
  if (branch.empty() ? !(ch.trunk.back().object == goal)
                     : !(branch.back().object == goal)) {
    if (err) *err = "branch does not end at K_window";
    return false;
  }
  return true;
}

}  // namespace detail

// Re-checks every justification of the chain exactly; on failure reports
// the failing step in *err.
template <class F>
bool verify_witness(const WitnessChain<F>& ch, std::string* err = nullptr) {
  if (ch.trunk.empty()) {
    if (err) *err = "empty chain";
    return false;
  }
  const auto& w = ch.trunk.front().object.window;
  F f = ch.trunk.front().object.field;
  std::vector<const WitnessStep<F>*> members;
  for (std::size_t i = 0; i < ch.trunk.size(); ++i) {
    if (!detail::check_step<F>(members, ch.trunk[i], err)) {
      if (err) *err = "trunk step " + std::to_string(i) + ": " + *err;
      return false;
    }
    members.push_back(&ch.trunk[i]);
  }
  // Case split: seeds of the two branches must tensor to the K_C member.
  if (ch.case_split_member >= 0) {
    if (ch.branch_b.empty() || ch.branch_d.empty()) {
      if (err) *err = "case split branches missing";
      return false;
    }
    auto prod = tensor(ch.branch_b.front().object, ch.branch_d.front().object);
    if (!isomorphic(prod, ch.trunk[ch.case_split_member].object)) {
      if (err) *err = "case split: K_B (x) K_D is not K_C";
      return false;
    }
  }
  auto goal = unit_rep(w, f);
  if (!detail::check_branch<F>(ch, ch.branch_b, goal, err)) {
    if (err) *err = "branch B: " + *err;
    return false;
  }
  if (!detail::check_branch<F>(ch, ch.branch_d, goal, err)) {
    if (err) *err = "branch D: " + *err;
    return false;
  }
  return true;
}

namespace detail {

// Steps deriving K_{target} from K_{base} along one saturation trace:
// per layer, a tensor-absorption producing the added dust points and an
// extension gluing them onto the previous set.
template <class F>
void append_saturation_steps(std::vector<WitnessStep<F>>& out, int base_index,
                             int dust_index, const IntervalSet& base,
                             const SaturationTrace& tr, const QuiverWindow& w,
                             F f, int index_offset) {
  IntervalSet cur = base;
  int cur_index = base_index;
  for (const auto& layer : tr.layers) {
    Representation<F> klayer = interval_rep(w, layer, f);
    // K_layer = K'_window (x) K_layer: the layer is totally disconnected.
    out.push_back({klayer,
                   JTensorAbsorb<F>{dust_index, klayer},
                   "dust layer"});
    int layer_index = index_offset + static_cast<int>(out.size()) - 1;
    IntervalSet next = cur.union_with(layer);
    Representation<F> kcur = interval_rep(w, cur, f);
    std::vector<Matrix<F>> eps;
    for (int k = 0; k < w.num_arrows(); ++k) {
      int s = w.arrow_source(k), t = w.arrow_target(k);
      Matrix<F> e(f, layer.contains(t) ? 1 : 0,
                  cur.contains(s) ? 1 : 0);
      if (layer.contains(t) && cur.contains(s)) e.at(0, 0) = f.one();
      eps.push_back(std::move(e));
    }
    auto ext = extension(klayer, kcur, eps);
    out.push_back({ext.middle,
                   JExtension<F>{layer_index, cur_index, eps},
                   "saturation extension"});
    int mid_index = index_offset + static_cast<int>(out.size()) - 1;
    Representation<F> knext = interval_rep(w, next, f);
    if (!(ext.middle == knext)) {
      out.push_back({knext, JIsoReplace<F>{mid_index}, "canonical form"});
      cur_index = index_offset + static_cast<int>(out.size()) - 1;
    } else {
      cur_index = mid_index;
    }
    cur = next;
  }
}

template <class F>
void append_branch(WitnessChain<F>& ch, std::vector<WitnessStep<F>>& branch,
                   const IntervalSet& start, const QuiverWindow& w, F f,
                   int dust_index) {
  int trunk_n = static_cast<int>(ch.trunk.size());
  branch.push_back({interval_rep(w, start, f), JSeed<F>{"case split"},
                    "prime case split seed"});
  int cur_index = trunk_n;  // branch indices continue after the trunk
  IntervalSet cur = start;

  auto tr_r = saturate_right(cur, w);
  append_saturation_steps(branch, cur_index, dust_index, cur, tr_r, w, f,
                          trunk_n);
  cur = tr_r.result;
  cur_index = trunk_n + static_cast<int>(branch.size()) - 1;

  auto tr_l = saturate_left(cur, w);
  append_saturation_steps(branch, cur_index, dust_index, cur, tr_l, w, f,
                          trunk_n);
  cur = tr_l.result;
  cur_index = trunk_n + static_cast<int>(branch.size()) - 1;

  IntervalSet e = cur.complement();
  if (e.empty()) {
    // Saturation already filled the window.
    auto kwin = unit_rep(w, f);
    if (!(branch.back().object == kwin))
      branch.push_back({kwin, JIsoReplace<F>{cur_index}, "full window"});
    return;
  }
  // K_E = K'_window (x) K_E: E is a set of isolated sinks.
  Representation<F> ke = interval_rep(w, e, f);
  branch.push_back({ke, JTensorAbsorb<F>{dust_index, ke}, "K_E"});
  int e_index = trunk_n + static_cast<int>(branch.size()) - 1;
  // 0 -> K_E -> K_window -> K_{B''} -> 0.
  std::vector<Matrix<F>> eps;
  for (int k = 0; k < w.num_arrows(); ++k) {
    int s = w.arrow_source(k), t = w.arrow_target(k);
    Matrix<F> em(f, e.contains(t) ? 1 : 0, cur.contains(s) ? 1 : 0);
    if (e.contains(t) && cur.contains(s)) em.at(0, 0) = f.one();
    eps.push_back(std::move(em));
  }
  auto ext = extension(ke, interval_rep(w, cur, f), eps);
  branch.push_back({ext.middle, JExtension<F>{e_index, cur_index, eps},
                    "final extension to K_window"});
  int mid_index = trunk_n + static_cast<int>(branch.size()) - 1;
  auto kwin = unit_rep(w, f);
  if (!(ext.middle == kwin))
    branch.push_back({kwin, JIsoReplace<F>{mid_index}, "canonical K_window"});
}

}  // namespace detail

// The executable closure contradiction: starting from seeds
// {v, K_{supp(v)^c}} (both assumed in a prime ideal M), derive K_window.
template <class F>
WitnessChain<F> full_witness(const QuiverWindow& w, const Representation<F>& v) {
  F f = v.field;
  if (w.max_path_length() >= w.size())
    throw std::invalid_argument("full_witness: path length bound violated");
  auto supp = support(v);
  if (supp.full())
    throw std::invalid_argument("full_witness: support must be proper");

  WitnessChain<F> ch;
  ch.trunk.push_back({v, JSeed<F>{"V in M"}, "seed V"});
  auto kcomp = interval_rep(w, supp.complement(), f);
  ch.trunk.push_back({kcomp, JSeed<F>{"K_{supp(V)^c} in M"}, "seed"});

  if (supp.empty()) {
    // Degenerate: the complement seed is already K_window.
    auto kwin = unit_rep(w, f);
    if (!(kcomp == kwin))
      ch.trunk.push_back({kwin, JIsoReplace<F>{1}, "K_window"});
    return ch;
  }

  // V (+) K_{supp^c} by a split extension.
  auto ds = split_extension(v, kcomp);
  std::vector<Matrix<F>> zero_eps;
  for (int k = 0; k < w.num_arrows(); ++k)
    zero_eps.emplace_back(f, v.dim_at(w.arrow_target(k)),
                          kcomp.dim_at(w.arrow_source(k)));
  ch.trunk.push_back({ds.middle, JExtension<F>{0, 1, zero_eps},
                      "V (+) K_{supp^c}"});

  // X = K'_window (x) (V (+) K_{supp^c}): full support, all maps zero.
  auto kprime = dust_rep(w, f);
  auto x = tensor(ds.middle, kprime);
  ch.trunk.push_back({x, JTensorAbsorb<F>{2, kprime}, "tensor with K'"});

  // Endomorphism of X with pointwise nullity one; its kernel is K'_window.
  auto endo = kernel_rank_one(x);
  ch.trunk.push_back({kprime, JKernelOf<F>{3, 3, endo.components},
                      "kernel is K'_window"});
  int dust_index = 4;

  auto lab = sinks_and_sources(w);
  auto bdc = bdc_sets(lab);

  // K_C = K'_window (x) K_C (C is totally disconnected).
  Representation<F> kc = interval_rep(w, bdc.c, f);
  ch.trunk.push_back({kc, JTensorAbsorb<F>{dust_index, kc}, "K_C"});
  ch.case_split_member = 5;

  detail::append_branch(ch, ch.branch_b, bdc.b, w, f, dust_index);
  detail::append_branch(ch, ch.branch_d, bdc.d, w, f, dust_index);
  return ch;
}

}  // namespace azrep
