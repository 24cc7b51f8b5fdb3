#pragma once

#include "grpd/map.hpp"
#include "grpd/skeleton.hpp"

#include <map>
#include <utility>
#include <vector>

namespace grpd {

struct PAdicLoopParams {
  long p = 2;
  int h = 1;

  void validate() const {
    if (!is_prime(p)) throw parse_error("p must be prime");
    if (h < 0) throw parse_error("h must be nonnegative");
  }
};

/// Free loop groupoid: objects (x, g) with g an automorphism of x,
/// morphisms alpha: (x, g) -> (x', alpha.g.alpha^{-1}) for alpha: x -> x'.
/// With `p > 0` only loops of p-power order are kept.
struct LoopGroupoid {
  Gptr grpd;
  GroupoidMap base_projection;                 // forgets the loop coordinate
  std::vector<std::pair<int, int>> object_label;  // (base object, loop morphism)

  int object_index(int x, int g) const {
    auto it = obj_index_.find({x, g});
    return it == obj_index_.end() ? -1 : it->second;
  }
  int morphism_index(int src_obj, int alpha) const {
    auto it = mor_index_.find({src_obj, alpha});
    return it == mor_index_.end() ? -1 : it->second;
  }

  std::map<std::pair<int, int>, int> obj_index_;
  std::map<std::pair<int, int>, int> mor_index_;
};

inline int automorphism_order(const FiniteGroupoid& x, int g) {
  int id = x.identity_at(x.src(g));
  int t = g, n = 1;
  while (t != id) {
    t = x.compose(g, t);
    ++n;
  }
  return n;
}

namespace detail {

/// Builds the full subgroupoid of the free loop groupoid on loops whose
/// order satisfies `keep`. Objects in lex (x, g) order, morphisms in lex
/// (source object, alpha) order.
template <class Pred>
LoopGroupoid loop_groupoid(const Gptr& x, Pred keep) {
  LoopGroupoid lg;
  std::vector<std::pair<int, int>> objs;
  for (int xo = 0; xo < x->num_objects(); ++xo)
    for (int g : x->hom(xo, xo))
      if (keep(automorphism_order(*x, g))) {
        lg.obj_index_[{xo, g}] = static_cast<int>(objs.size());
        objs.emplace_back(xo, g);
      }
  int nobj = static_cast<int>(objs.size());
  std::vector<int> msrc, mtgt, mbase;
  for (int so = 0; so < nobj; ++so) {
    auto [xo, g] = objs[so];
    for (int alpha : x->out_of(xo)) {
      int g2 = x->compose(x->compose(alpha, g), x->inverse_of(alpha));
      int to = lg.object_index(x->tgt(alpha), g2);
      if (to < 0) throw theorem_violation("loop groupoid: conjugate loop missing");
      lg.mor_index_[{so, alpha}] = static_cast<int>(msrc.size());
      msrc.push_back(so);
      mtgt.push_back(to);
      mbase.push_back(alpha);
    }
  }
  int nmor = static_cast<int>(msrc.size());
  std::vector<int> id(nobj), inv(nmor);
  for (int o = 0; o < nobj; ++o) id[o] = lg.mor_index_.at({o, x->identity_at(objs[o].first)});
  for (int m = 0; m < nmor; ++m) inv[m] = lg.mor_index_.at({mtgt[m], x->inverse_of(mbase[m])});
  std::unordered_map<uint64_t, int> comp;
  std::vector<std::vector<int>> out(nobj);
  for (int m = 0; m < nmor; ++m) out[msrc[m]].push_back(m);
  for (int m1 = 0; m1 < nmor; ++m1)
    for (int m2 : out[mtgt[m1]])
      comp[static_cast<uint64_t>(m2) * nmor + m1] =
          lg.mor_index_.at({msrc[m1], x->compose(mbase[m2], mbase[m1])});
  lg.grpd = std::make_shared<FiniteGroupoid>(
      FiniteGroupoid::build(nobj, msrc, mtgt, id, inv, comp));
  std::vector<int> oproj(nobj);
  for (int o = 0; o < nobj; ++o) oproj[o] = objs[o].first;
  lg.base_projection = GroupoidMap(lg.grpd, x, oproj, mbase);
  lg.object_label = std::move(objs);
  return lg;
}

}  // namespace detail

inline LoopGroupoid free_loop(const Gptr& x) {
  return detail::loop_groupoid(x, [](int) { return true; });
}

inline LoopGroupoid p_free_loop(const Gptr& x, long p) {
  if (!is_prime(p)) throw parse_error("p must be prime");
  return detail::loop_groupoid(x, [p](int n) { return is_p_power(n, static_cast<int>(p)); });
}

inline Gptr iterated_p_free_loop(const Gptr& x, const PAdicLoopParams& params) {
  params.validate();
  Gptr cur = x;
  for (int i = 0; i < params.h; ++i) cur = p_free_loop(cur, params.p).grpd;
  return cur;
}

namespace detail {

/// The functor induced on loop groupoids by f (loops map to loops of
/// dividing order, so any order predicate closed under division is safe).
inline GroupoidMap induced_loop_map(const LoopGroupoid& lx, const LoopGroupoid& ly,
                                    const GroupoidMap& f) {
  std::vector<int> omap(lx.grpd->num_objects()), mmap(lx.grpd->num_morphisms());
  for (int o = 0; o < lx.grpd->num_objects(); ++o) {
    auto [x, g] = lx.object_label[o];
    omap[o] = ly.object_index(f.obj_map[x], f.mor_map[g]);
    if (omap[o] < 0) throw theorem_violation("loop map: image object missing");
  }
  for (int m = 0; m < lx.grpd->num_morphisms(); ++m) {
    int so = lx.grpd->src(m);
    mmap[m] = ly.morphism_index(omap[so], f.mor_map[lx.base_projection.mor_map[m]]);
    if (mmap[m] < 0) throw theorem_violation("loop map: image morphism missing");
  }
  return GroupoidMap(lx.grpd, ly.grpd, std::move(omap), std::move(mmap));
}

}  // namespace detail

/// L f for the plain free loop functor.
inline GroupoidMap free_loop_map(const GroupoidMap& f) {
  return detail::induced_loop_map(free_loop(f.source), free_loop(f.target), f);
}

/// The functor induced on h-fold p-adic loop groupoids; h = 0 gives f back.
inline GroupoidMap loop_map(const GroupoidMap& f, const PAdicLoopParams& params) {
  params.validate();
  GroupoidMap cur = f;
  for (int i = 0; i < params.h; ++i)
    cur = detail::induced_loop_map(p_free_loop(cur.source, params.p),
                                   p_free_loop(cur.target, params.p), cur);
  return cur;
}

/// One-shot model of the h-fold p-adic free loop space of BG: h-tuples of
/// pairwise commuting p-power-order elements with simultaneous conjugation.
/// Serves as the independent oracle for iterated_p_free_loop on deloopings.
inline Gptr commuting_tuples_direct(const FiniteGroup& g, const PAdicLoopParams& params) {
  params.validate();
  const int p = static_cast<int>(params.p);
  std::vector<int> ppow;
  for (int e = 0; e < g.order; ++e)
    if (is_p_power(g.element_order(e), p)) ppow.push_back(e);

  std::vector<std::vector<int>> tuples;
  std::vector<int> cur;
  // lexicographic enumeration of commuting tuples
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == params.h) {
      tuples.push_back(cur);
      return;
    }
    for (int e : ppow) {
      bool ok = true;
      for (int prev : cur)
        if (!g.commute(prev, e)) {
          ok = false;
          break;
        }
      if (ok) {
        cur.push_back(e);
        rec();
        cur.pop_back();
      }
    }
  };
  rec();

  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < tuples.size(); ++i) index[tuples[i]] = static_cast<int>(i);
  auto act = [&](int a, int s) {
    std::vector<int> t = tuples[s];
    for (int& e : t) e = g.mul[g.mul[a][e]][g.inv[a]];
    return index.at(t);
  };
  return action_groupoid(g, static_cast<int>(tuples.size()), act);
}

}  // namespace grpd
