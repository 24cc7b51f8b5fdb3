#pragma once

#include "grpd/group.hpp"
#include "grpd/rational.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <functional>
#include <memory>
#include <unordered_map>
#include <vector>

namespace grpd {

/// Finite groupoid with explicit objects, morphisms and composition.
/// Immutable once built; all constructors validate the category axioms.
class FiniteGroupoid {
 public:
  int num_objects() const { return static_cast<int>(identity_.size()); }
  int num_morphisms() const { return static_cast<int>(src_.size()); }

  int src(int m) const { return src_[m]; }
  int tgt(int m) const { return tgt_[m]; }
  int identity_at(int x) const { return identity_[x]; }
  int inverse_of(int m) const { return inverse_[m]; }

  bool composable(int g, int f) const { return tgt_[f] == src_[g]; }

  /// comp(g, f) = g after f; defined exactly when tgt(f) = src(g).
  int compose(int g, int f) const {
    assert(composable(g, f));
    return comp_.at(key(g, f));
  }

  /// Morphism ids x -> y in increasing order.
  std::vector<int> hom(int x, int y) const {
    std::vector<int> out;
    for (int m : by_src_[x])
      if (tgt_[m] == y) out.push_back(m);
    return out;
  }

  const std::vector<int>& out_of(int x) const { return by_src_[x]; }

  /// Assembles and fully checks a groupoid. `comp` lists (g, f) -> g.f for
  /// every composable pair.
  static FiniteGroupoid build(int num_objects, std::vector<int> src, std::vector<int> tgt,
                              std::vector<int> identity, std::vector<int> inverse,
                              std::unordered_map<uint64_t, int> comp) {
    FiniteGroupoid g;
    g.src_ = std::move(src);
    g.tgt_ = std::move(tgt);
    g.identity_ = std::move(identity);
    g.inverse_ = std::move(inverse);
    g.comp_ = std::move(comp);
    if (static_cast<int>(g.identity_.size()) != num_objects)
      throw parse_error("groupoid: identity table size mismatch");
    g.index();
    g.validate();
    return g;
  }

  /// Assembles without validating. For internal constructions (pullbacks,
  /// loop groupoids) whose tables are correct by construction; validation
  /// there is quadratic in hom-set sizes and dominates the running time.
  static FiniteGroupoid build_trusted(int num_objects, std::vector<int> src,
                                      std::vector<int> tgt, std::vector<int> identity,
                                      std::vector<int> inverse,
                                      std::unordered_map<uint64_t, int> comp) {
    FiniteGroupoid g;
    g.src_ = std::move(src);
    g.tgt_ = std::move(tgt);
    g.identity_ = std::move(identity);
    g.inverse_ = std::move(inverse);
    g.comp_ = std::move(comp);
    if (static_cast<int>(g.identity_.size()) != num_objects)
      throw parse_error("groupoid: identity table size mismatch");
    g.index();
    return g;
  }

  void validate() const {
    const int m = num_morphisms();
    for (int i = 0; i < m; ++i) {
      if (src_[i] < 0 || src_[i] >= num_objects() || tgt_[i] < 0 || tgt_[i] >= num_objects())
        throw parse_error("groupoid: morphism endpoint out of range");
    }
    for (int x = 0; x < num_objects(); ++x) {
      int e = identity_[x];
      if (e < 0 || e >= m || src_[e] != x || tgt_[e] != x)
        throw parse_error("groupoid: bad identity morphism");
    }
    // Composition total on composable pairs, endpoints correct, unital.
    for (int f = 0; f < m; ++f)
      for (int g : by_src_[tgt_[f]]) {
        auto it = comp_.find(key(g, f));
        if (it == comp_.end()) throw parse_error("groupoid: composition not defined");
        int gf = it->second;
        if (gf < 0 || gf >= m || src_[gf] != src_[f] || tgt_[gf] != tgt_[g])
          throw parse_error("groupoid: composite has wrong endpoints");
      }
    for (int f = 0; f < m; ++f) {
      if (compose(identity_[tgt_[f]], f) != f || compose(f, identity_[src_[f]]) != f)
        throw parse_error("groupoid: composition not unital");
      int i = inverse_[f];
      if (i < 0 || i >= m || src_[i] != tgt_[f] || tgt_[i] != src_[f] ||
          compose(i, f) != identity_[src_[f]] || compose(f, i) != identity_[tgt_[f]])
        throw parse_error("groupoid: morphism without two-sided inverse");
    }
    // Associativity over all composable triples.
    for (int f = 0; f < m; ++f)
      for (int g : by_src_[tgt_[f]])
        for (int h : by_src_[tgt_[g]])
          if (compose(h, compose(g, f)) != compose(compose(h, g), f))
            throw parse_error("groupoid: composition not associative");
  }

  bool operator==(const FiniteGroupoid& o) const {
    return src_ == o.src_ && tgt_ == o.tgt_ && identity_ == o.identity_ &&
           inverse_ == o.inverse_ && comp_ == o.comp_;
  }

 private:
  uint64_t key(int g, int f) const {
    return static_cast<uint64_t>(g) * static_cast<uint64_t>(src_.size()) +
           static_cast<uint64_t>(f);
  }
  void index() {
    by_src_.assign(identity_.size(), {});
    for (int i = 0; i < num_morphisms(); ++i) by_src_[src_[i]].push_back(i);
  }

  std::vector<int> src_, tgt_;
  std::vector<int> identity_;
  std::vector<int> inverse_;
  std::unordered_map<uint64_t, int> comp_;
  std::vector<std::vector<int>> by_src_;
};

using Gptr = std::shared_ptr<const FiniteGroupoid>;

/// Same groupoid: shared instance, or structurally identical tables.
/// Independently computed towers (loop groupoids, pullbacks) produce
/// distinct instances of the same groupoid, so identity checks between
/// library outputs must be structural.
inline bool same_groupoid(const Gptr& a, const Gptr& b) {
  return a.get() == b.get() || *a == *b;
}

inline Gptr discrete_groupoid(int n) {
  if (n < 0) throw parse_error("discrete groupoid needs n >= 0");
  std::vector<int> src(n), tgt(n), id(n), inv(n);
  std::unordered_map<uint64_t, int> comp;
  for (int i = 0; i < n; ++i) {
    src[i] = tgt[i] = id[i] = inv[i] = i;
    comp[static_cast<uint64_t>(i) * n + i] = i;
  }
  return std::make_shared<FiniteGroupoid>(
      FiniteGroupoid::build(n, src, tgt, id, inv, comp));
}

inline Gptr point_groupoid() { return discrete_groupoid(1); }

/// One object, morphisms = group elements, composition = multiplication.
inline Gptr delooping(const FiniteGroup& g) {
  int n = g.order;
  std::vector<int> src(n, 0), tgt(n, 0), id{g.identity}, inv = g.inv;
  std::unordered_map<uint64_t, int> comp;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      comp[static_cast<uint64_t>(a) * n + b] = g.mul[a][b];
  return std::make_shared<FiniteGroupoid>(
      FiniteGroupoid::build(1, src, tgt, id, inv, comp));
}

/// Action groupoid G//S: objects the points of S, morphism (g, s): s -> g.s
/// with id g * |S| + s. The action axioms are verified up front.
inline Gptr action_groupoid(const FiniteGroup& g, int npoints,
                            const std::function<int(int, int)>& act) {
  for (int s = 0; s < npoints; ++s)
    if (act(g.identity, s) != s)
      throw parse_error("action: identity does not act trivially");
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      for (int s = 0; s < npoints; ++s)
        if (act(a, act(b, s)) != act(g.mul[a][b], s))
          throw parse_error("action: compatibility axiom fails");

  int m = g.order * npoints;
  std::vector<int> src(m), tgt(m), id(npoints), inv(m);
  std::unordered_map<uint64_t, int> comp;
  auto mid = [&](int a, int s) { return a * npoints + s; };
  for (int a = 0; a < g.order; ++a)
    for (int s = 0; s < npoints; ++s) {
      src[mid(a, s)] = s;
      tgt[mid(a, s)] = act(a, s);
      inv[mid(a, s)] = mid(g.inv[a], act(a, s));
    }
  for (int s = 0; s < npoints; ++s) id[s] = mid(g.identity, s);
  for (int b = 0; b < g.order; ++b)
    for (int s = 0; s < npoints; ++s)
      for (int a = 0; a < g.order; ++a)
        comp[static_cast<uint64_t>(mid(a, act(b, s))) * m + mid(b, s)] =
            mid(g.mul[a][b], s);
  return std::make_shared<FiniteGroupoid>(
      FiniteGroupoid::build(npoints, src, tgt, id, inv, comp));
}

/// Conjugation action groupoid G//G.
inline Gptr conjugation_groupoid(const FiniteGroup& g) {
  return action_groupoid(g, g.order, [&g](int a, int s) {
    return g.mul[g.mul[a][s]][g.inv[a]];
  });
}

inline Gptr disjoint_union(const std::vector<Gptr>& parts) {
  int nobj = 0, nmor = 0;
  for (const auto& p : parts) {
    nobj += p->num_objects();
    nmor += p->num_morphisms();
  }
  std::vector<int> src, tgt, id, inv;
  src.reserve(nmor), tgt.reserve(nmor), inv.reserve(nmor), id.reserve(nobj);
  std::unordered_map<uint64_t, int> comp;
  int obj_off = 0, mor_off = 0;
  for (const auto& p : parts) {
    for (int i = 0; i < p->num_morphisms(); ++i) {
      src.push_back(p->src(i) + obj_off);
      tgt.push_back(p->tgt(i) + obj_off);
      inv.push_back(p->inverse_of(i) + mor_off);
    }
    for (int x = 0; x < p->num_objects(); ++x) id.push_back(p->identity_at(x) + mor_off);
    for (int f = 0; f < p->num_morphisms(); ++f)
      for (int g : p->out_of(p->tgt(f)))
        comp[static_cast<uint64_t>(g + mor_off) * nmor + (f + mor_off)] =
            p->compose(g, f) + mor_off;
    obj_off += p->num_objects();
    mor_off += p->num_morphisms();
  }
  return std::make_shared<FiniteGroupoid>(
      FiniteGroupoid::build(nobj, src, tgt, id, inv, comp));
}

/// Product groupoid; object (x, y) has index x * nY + y, morphism (f, g)
/// index f * mY + g.
inline Gptr product(const Gptr& a, const Gptr& b) {
  int nobj = a->num_objects() * b->num_objects();
  int nmor = a->num_morphisms() * b->num_morphisms();
  int oy = b->num_objects(), my = b->num_morphisms();
  std::vector<int> src(nmor), tgt(nmor), id(nobj), inv(nmor);
  std::unordered_map<uint64_t, int> comp;
  for (int f = 0; f < a->num_morphisms(); ++f)
    for (int g = 0; g < b->num_morphisms(); ++g) {
      int m = f * my + g;
      src[m] = a->src(f) * oy + b->src(g);
      tgt[m] = a->tgt(f) * oy + b->tgt(g);
      inv[m] = a->inverse_of(f) * my + b->inverse_of(g);
    }
  for (int x = 0; x < a->num_objects(); ++x)
    for (int y = 0; y < b->num_objects(); ++y)
      id[x * oy + y] = a->identity_at(x) * my + b->identity_at(y);
  for (int f1 = 0; f1 < a->num_morphisms(); ++f1)
    for (int g1 : a->out_of(a->tgt(f1)))
      for (int f2 = 0; f2 < b->num_morphisms(); ++f2)
        for (int g2 : b->out_of(b->tgt(f2)))
          comp[static_cast<uint64_t>(g1 * my + g2) * nmor + (f1 * my + f2)] =
              a->compose(g1, f1) * my + b->compose(g2, f2);
  return std::make_shared<FiniteGroupoid>(
      FiniteGroupoid::build(nobj, src, tgt, id, inv, comp));
}

/// Full subgroupoid on a subset of objects, with the object and morphism
/// renumbering maps (old -> new, -1 when dropped).
struct Subgroupoid {
  Gptr grpd;
  std::vector<int> obj_new;  // per old object
  std::vector<int> mor_new;  // per old morphism
};

inline Subgroupoid full_subgroupoid(const Gptr& x, const std::vector<bool>& keep_object) {
  Subgroupoid out;
  out.obj_new.assign(x->num_objects(), -1);
  out.mor_new.assign(x->num_morphisms(), -1);
  int nobj = 0;
  for (int i = 0; i < x->num_objects(); ++i)
    if (keep_object[i]) out.obj_new[i] = nobj++;
  std::vector<int> src, tgt, id(nobj), inv;
  std::vector<int> old_mor;
  for (int m = 0; m < x->num_morphisms(); ++m)
    if (keep_object[x->src(m)] && keep_object[x->tgt(m)]) {
      out.mor_new[m] = static_cast<int>(old_mor.size());
      old_mor.push_back(m);
      src.push_back(out.obj_new[x->src(m)]);
      tgt.push_back(out.obj_new[x->tgt(m)]);
    }
  inv.resize(old_mor.size());
  for (size_t m = 0; m < old_mor.size(); ++m)
    inv[m] = out.mor_new[x->inverse_of(old_mor[m])];
  for (int i = 0; i < x->num_objects(); ++i)
    if (keep_object[i]) id[out.obj_new[i]] = out.mor_new[x->identity_at(i)];
  std::unordered_map<uint64_t, int> comp;
  uint64_t nmor = old_mor.size();
  for (size_t f = 0; f < old_mor.size(); ++f)
    for (int g : x->out_of(x->tgt(old_mor[f])))
      if (out.mor_new[g] >= 0)
        comp[static_cast<uint64_t>(out.mor_new[g]) * nmor + f] =
            out.mor_new[x->compose(g, old_mor[f])];
  out.grpd = std::make_shared<FiniteGroupoid>(FiniteGroupoid::build(
      nobj, std::move(src), std::move(tgt), std::move(id), std::move(inv), std::move(comp)));
  return out;
}

}  // namespace grpd
