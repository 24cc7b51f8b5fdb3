#pragma once

#include "grpd/groupoid.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace grpd {

struct SkelComponent {
  int rep;                    // lowest object index in the component
  FiniteGroup aut;            // automorphisms of rep as a group
  std::vector<int> aut_mors;  // morphism id of each group element
};

/// Skeleton of a groupoid: one representative per connected component with
/// its automorphism group, plus a chosen morphism from every object to its
/// representative (lowest morphism id).
struct Skeleton {
  std::vector<SkelComponent> components;
  std::vector<int> component_of;  // per object
  std::vector<int> iso_to_rep;    // per object: morphism id object -> rep

  int num_components() const { return static_cast<int>(components.size()); }
};

inline Skeleton skeletize(const FiniteGroupoid& x) {
  Skeleton sk;
  sk.component_of.assign(x.num_objects(), -1);
  sk.iso_to_rep.assign(x.num_objects(), -1);
  for (int o = 0; o < x.num_objects(); ++o) {
    if (sk.component_of[o] >= 0) continue;
    int c = sk.num_components();
    // In a groupoid every object of a component has a direct morphism to
    // the representative; BFS is unnecessary.
    SkelComponent comp;
    comp.rep = o;
    std::vector<int> members;
    for (int m : x.out_of(o)) {
      int t = x.tgt(m);
      if (sk.component_of[t] < 0) {
        sk.component_of[t] = c;
        members.push_back(t);
      }
    }
    for (int t : members) {
      auto to_rep = x.hom(t, o);
      sk.iso_to_rep[t] = to_rep.front();  // lowest morphism id
    }
    comp.aut_mors = x.hom(o, o);
    int n = static_cast<int>(comp.aut_mors.size());
    comp.aut.order = n;
    comp.aut.mul.assign(n, std::vector<int>(n));
    comp.aut.inv.assign(n, 0);
    std::vector<int> elem_index(x.num_morphisms(), -1);
    for (int i = 0; i < n; ++i) elem_index[comp.aut_mors[i]] = i;
    for (int i = 0; i < n; ++i) {
      if (comp.aut_mors[i] == x.identity_at(o)) comp.aut.identity = i;
      comp.aut.inv[i] = elem_index[x.inverse_of(comp.aut_mors[i])];
      for (int j = 0; j < n; ++j)
        comp.aut.mul[i][j] = elem_index[x.compose(comp.aut_mors[i], comp.aut_mors[j])];
    }
    sk.components.push_back(std::move(comp));
  }
  return sk;
}

inline Skeleton skeletize(const Gptr& x) { return skeletize(*x); }

/// Baez-Dolan homotopy cardinality: sum of 1/|Aut| over components.
inline Rational cardinality(const FiniteGroupoid& x) {
  Skeleton sk = skeletize(x);
  Rational total = 0;
  for (const auto& c : sk.components) total += Rational(1, c.aut.order);
  return total;
}

inline Rational cardinality(const Gptr& x) { return cardinality(*x); }

/// Equivalence of groupoids, decided on skeleta: equal component counts and
/// a bijection matching automorphism groups up to isomorphism. The group
/// isomorphism search is brute force, bounded by `order_bound`.
inline bool equivalence_check(const FiniteGroupoid& x, const FiniteGroupoid& y,
                              int order_bound = 128) {
  Skeleton sx = skeletize(x), sy = skeletize(y);
  if (sx.num_components() != sy.num_components()) return false;
  // Partition both sides into isomorphism classes and compare class sizes.
  // Isomorphism is an equivalence relation, so greedy classification works.
  auto classify = [order_bound](const Skeleton& s) {
    std::vector<const FiniteGroup*> reps;
    std::vector<int> sizes;
    for (const auto& c : s.components) {
      bool placed = false;
      for (size_t k = 0; k < reps.size(); ++k)
        if (groups_isomorphic(*reps[k], c.aut, order_bound)) {
          ++sizes[k];
          placed = true;
          break;
        }
      if (!placed) {
        reps.push_back(&c.aut);
        sizes.push_back(1);
      }
    }
    return std::pair(reps, sizes);
  };
  auto [rx, nx] = classify(sx);
  auto [ry, ny] = classify(sy);
  if (rx.size() != ry.size()) return false;
  std::vector<bool> used(ry.size(), false);
  for (size_t i = 0; i < rx.size(); ++i) {
    bool matched = false;
    for (size_t j = 0; j < ry.size(); ++j) {
      if (used[j] || nx[i] != ny[j]) continue;
      if (groups_isomorphic(*rx[i], *ry[j], order_bound)) {
        used[j] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

inline bool equivalence_check(const Gptr& x, const Gptr& y, int order_bound = 128) {
  return equivalence_check(*x, *y, order_bound);
}

}  // namespace grpd
