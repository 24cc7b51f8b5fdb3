#pragma once

#include "grpd/rational.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace grpd {

/// Finite group given by an explicit multiplication table on 0..n-1.
struct FiniteGroup {
  int order = 0;
  std::vector<std::vector<int>> mul;  // mul[g][h] = g*h
  int identity = 0;
  std::vector<int> inv;

  int op(int g, int h) const { return mul[g][h]; }

  /// Checks associativity, two-sided identity and inverses by full loops.
  void validate() const {
    if (order <= 0 || static_cast<int>(mul.size()) != order)
      throw parse_error("group: bad multiplication table shape");
    for (const auto& row : mul) {
      if (static_cast<int>(row.size()) != order)
        throw parse_error("group: bad multiplication table shape");
      for (int v : row)
        if (v < 0 || v >= order) throw parse_error("group: table entry out of range");
    }
    for (int g = 0; g < order; ++g) {
      if (mul[identity][g] != g || mul[g][identity] != g)
        throw parse_error("group: identity is not two-sided");
      if (mul[inv[g]][g] != identity || mul[g][inv[g]] != identity)
        throw parse_error("group: inv[] is not a two-sided inverse");
    }
    for (int a = 0; a < order; ++a)
      for (int b = 0; b < order; ++b)
        for (int c = 0; c < order; ++c)
          if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
            throw parse_error("group: multiplication is not associative");
  }

  int element_order(int g) const {
    int x = g, n = 1;
    while (x != identity) {
      x = mul[g][x];
      ++n;
    }
    return n;
  }

  bool commute(int g, int h) const { return mul[g][h] == mul[h][g]; }
};

inline bool is_p_power(int n, int p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

inline bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Builds a group from its elements-as-permutations closure. The identity
/// gets index 0; new elements are appended in BFS discovery order, so the
/// numbering is deterministic.
inline FiniteGroup group_from_permutations(const std::vector<std::vector<int>>& generators) {
  size_t npoints = 1;
  for (const auto& g : generators) {
    if (g.empty()) throw parse_error("permutation generator on empty set");
    npoints = std::max(npoints, g.size());
  }
  for (const auto& g : generators) {
    if (g.size() != npoints)
      throw parse_error("permutation generators act on different sets");
    std::vector<bool> seen(npoints, false);
    for (int v : g) {
      if (v < 0 || v >= static_cast<int>(npoints) || seen[v])
        throw parse_error("generator is not a bijection");
      seen[v] = true;
    }
  }

  std::vector<int> id(npoints);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> elems{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  for (size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : generators) {
      std::vector<int> prod(npoints);
      for (size_t k = 0; k < npoints; ++k) prod[k] = g[elems[i][k]];
      if (index.emplace(prod, static_cast<int>(elems.size())).second)
        elems.push_back(std::move(prod));
    }
  }

  FiniteGroup grp;
  grp.order = static_cast<int>(elems.size());
  grp.identity = 0;
  grp.mul.assign(grp.order, std::vector<int>(grp.order));
  grp.inv.assign(grp.order, 0);
  for (int a = 0; a < grp.order; ++a)
    for (int b = 0; b < grp.order; ++b) {
      std::vector<int> prod(npoints);
      for (size_t k = 0; k < npoints; ++k) prod[k] = elems[a][elems[b][k]];
      grp.mul[a][b] = index.at(prod);
      if (grp.mul[a][b] == grp.identity) grp.inv[a] = b, grp.inv[b] = a;
    }
  return grp;
}

inline FiniteGroup trivial_group() {
  return group_from_permutations({});
}

inline FiniteGroup cyclic_group(int n) {
  assert(n >= 1);
  std::vector<int> shift(n);
  for (int i = 0; i < n; ++i) shift[i] = (i + 1) % n;
  return group_from_permutations({shift});
}

inline FiniteGroup symmetric_group(int n) {
  assert(n >= 1);
  if (n == 1) return trivial_group();
  std::vector<int> swap01(n), cycle(n);
  std::iota(swap01.begin(), swap01.end(), 0);
  std::swap(swap01[0], swap01[1]);
  for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  return group_from_permutations({swap01, cycle});
}

inline FiniteGroup alternating_group(int n) {
  assert(n >= 3);
  std::vector<int> c3(n), c;
  std::iota(c3.begin(), c3.end(), 0);
  c3[0] = 1, c3[1] = 2, c3[2] = 0;
  if (n % 2 == 1) {
    c.resize(n);
    for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
  } else {
    c.resize(n);
    c[0] = 0;
    for (int i = 1; i < n; ++i) c[i] = 1 + (i % (n - 1));
  }
  return group_from_permutations({c3, c});
}

inline FiniteGroup dihedral_group(int n) {
  // Symmetries of the regular n-gon, order 2n.
  assert(n >= 2);
  std::vector<int> rot(n), refl(n);
  for (int i = 0; i < n; ++i) rot[i] = (i + 1) % n;
  for (int i = 0; i < n; ++i) refl[i] = (n - i) % n;
  return group_from_permutations({rot, refl});
}

/// Quaternion group of order 8 via its regular permutation action.
/// Element order: 1, -1, i, -i, j, -j, k, -k.
inline FiniteGroup quaternion_group() {
  // Right multiplication by i and j on the ordered basis above.
  std::vector<int> by_i = {2, 3, 1, 0, 7, 6, 4, 5};
  std::vector<int> by_j = {4, 5, 6, 7, 1, 0, 3, 2};
  return group_from_permutations({by_i, by_j});
}

inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  FiniteGroup g;
  g.order = a.order * b.order;
  g.identity = a.identity * b.order + b.identity;
  g.mul.assign(g.order, std::vector<int>(g.order));
  g.inv.assign(g.order, 0);
  for (int x1 = 0; x1 < a.order; ++x1)
    for (int x2 = 0; x2 < b.order; ++x2) {
      int x = x1 * b.order + x2;
      g.inv[x] = a.inv[x1] * b.order + b.inv[x2];
      for (int y1 = 0; y1 < a.order; ++y1)
        for (int y2 = 0; y2 < b.order; ++y2)
          g.mul[x][y1 * b.order + y2] = a.mul[x1][y1] * b.order + b.mul[x2][y2];
    }
  return g;
}

/// Closure of a subset under multiplication; returns sorted element list.
inline std::vector<int> subgroup_closure(const FiniteGroup& g, std::vector<int> gens) {
  std::set<int> elems{g.identity};
  std::vector<int> frontier{g.identity};
  for (size_t i = 0; i < frontier.size(); ++i)
    for (int s : gens) {
      int prod = g.mul[frontier[i]][s];
      if (elems.insert(prod).second) frontier.push_back(prod);
    }
  return {elems.begin(), elems.end()};
}

/// All subgroups as sorted element lists, by brute-force closure of
/// generating sets of size <= 3. Complete for |G| <= 24: every subgroup of
/// such a group is at most 3-generated.
inline std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g) {
  if (g.order > 24) throw capacity_error("subgroup enumeration limited to order <= 24");
  std::set<std::vector<int>> found;
  found.insert(subgroup_closure(g, {}));
  for (int a = 0; a < g.order; ++a) {
    found.insert(subgroup_closure(g, {a}));
    for (int b = a + 1; b < g.order; ++b) {
      found.insert(subgroup_closure(g, {a, b}));
      for (int c = b + 1; c < g.order; ++c) found.insert(subgroup_closure(g, {a, b, c}));
    }
  }
  return {found.begin(), found.end()};
}

/// A subgroup repackaged as a standalone group together with the inclusion:
/// element i of `sub` is element `images[i]` of the parent.
struct SubgroupEmbedding {
  FiniteGroup sub;
  std::vector<int> images;
};

inline SubgroupEmbedding subgroup_as_group(const FiniteGroup& g, std::vector<int> elems) {
  std::sort(elems.begin(), elems.end());
  std::vector<int> pos(g.order, -1);
  for (size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
  SubgroupEmbedding out;
  out.images = elems;
  out.sub.order = static_cast<int>(elems.size());
  out.sub.identity = pos[g.identity];
  if (out.sub.identity < 0) throw parse_error("subgroup: missing identity");
  out.sub.mul.assign(out.sub.order, std::vector<int>(out.sub.order));
  out.sub.inv.assign(out.sub.order, 0);
  for (int i = 0; i < out.sub.order; ++i) {
    if (pos[g.inv[elems[i]]] < 0) throw parse_error("subgroup: not closed under inverse");
    out.sub.inv[i] = pos[g.inv[elems[i]]];
    for (int j = 0; j < out.sub.order; ++j) {
      int prod = pos[g.mul[elems[i]][elems[j]]];
      if (prod < 0) throw parse_error("subgroup: not closed under multiplication");
      out.sub.mul[i][j] = prod;
    }
  }
  return out;
}

namespace detail {

inline std::vector<int> minimal_generators(const FiniteGroup& g) {
  std::vector<int> gens;
  std::vector<int> closure = subgroup_closure(g, gens);
  while (static_cast<int>(closure.size()) < g.order) {
    for (int x = 0; x < g.order; ++x) {
      if (!std::binary_search(closure.begin(), closure.end(), x)) {
        gens.push_back(x);
        break;
      }
    }
    closure = subgroup_closure(g, gens);
  }
  return gens;
}

inline bool extend_isomorphism(const FiniteGroup& a, const FiniteGroup& b,
                               const std::vector<int>& gens, size_t k,
                               std::vector<int>& img) {
  if (k == gens.size()) {
    // Images of generators fixed; grow the full homomorphism by closure
    // and check it is well defined and bijective.
    std::vector<int> phi(a.order, -1);
    phi[a.identity] = b.identity;
    std::vector<int> frontier{a.identity};
    for (size_t i = 0; i < frontier.size(); ++i)
      for (size_t j = 0; j < gens.size(); ++j) {
        int x = a.mul[frontier[i]][gens[j]];
        int y = b.mul[phi[frontier[i]]][img[j]];
        if (phi[x] == -1) {
          phi[x] = y;
          frontier.push_back(x);
        } else if (phi[x] != y) {
          return false;
        }
      }
    std::vector<bool> hit(b.order, false);
    for (int x = 0; x < a.order; ++x) {
      if (phi[x] < 0 || hit[phi[x]]) return false;
      hit[phi[x]] = true;
    }
    for (int x = 0; x < a.order; ++x)
      for (int y = 0; y < a.order; ++y)
        if (phi[a.mul[x][y]] != b.mul[phi[x]][phi[y]]) return false;
    return true;
  }
  int want = a.element_order(gens[k]);
  for (int y = 0; y < b.order; ++y) {
    if (b.element_order(y) != want) continue;
    img[k] = y;
    if (extend_isomorphism(a, b, gens, k + 1, img)) return true;
  }
  return false;
}

}  // namespace detail

/// Brute-force isomorphism test: backtracking over generator images with
/// element-order pruning. Guarded by a capacity bound.
inline bool groups_isomorphic(const FiniteGroup& a, const FiniteGroup& b,
                              int order_bound = 128) {
  if (a.order != b.order) return false;
  if (a.order > order_bound)
    throw capacity_error("group isomorphism search limited to order " +
                         std::to_string(order_bound));
  std::vector<int> orders_a(a.order), orders_b(b.order);
  for (int x = 0; x < a.order; ++x) orders_a[x] = a.element_order(x);
  for (int x = 0; x < b.order; ++x) orders_b[x] = b.element_order(x);
  {
    auto sa = orders_a, sb = orders_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<int> gens = detail::minimal_generators(a);
  std::vector<int> img(gens.size());
  return detail::extend_isomorphism(a, b, gens, 0, img);
}

}  // namespace grpd
