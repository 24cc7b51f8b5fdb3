#pragma once

#include "grpd/local_system.hpp"
#include "grpd/loops.hpp"
#include "grpd/span.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace grpd {

/// Matrix representation of a finite group over the rationals.
struct RationalRep {
  FiniteGroup group;
  int dim = 0;
  std::vector<QMat> images;  // per group element

  RationalRep() = default;
  RationalRep(FiniteGroup g, std::vector<QMat> imgs)
      : group(std::move(g)), images(std::move(imgs)) {
    dim = images.empty() ? 0 : images[0].rows();
    validate();
  }

  void validate() const {
    if (static_cast<int>(images.size()) != group.order)
      throw parse_error("representation: one matrix per group element required");
    for (const auto& m : images)
      if (m.rows() != dim || m.cols() != dim)
        throw parse_error("representation: matrix shape mismatch");
    if (group.order > 0 && !images[group.identity].is_identity())
      throw parse_error("representation: identity must map to the identity matrix");
    // Homomorphism on (generator, element) pairs implies it on all pairs by
    // induction on word length, given the identity check above.
    for (int a : detail::minimal_generators(group))
      for (int b = 0; b < group.order; ++b)
        if (images[group.mul[a][b]] != images[a] * images[b])
          throw parse_error("representation: not a homomorphism");
  }
};

inline RationalRep trivial_rep(const FiniteGroup& g) {
  return RationalRep(g, std::vector<QMat>(g.order, QMat::identity(1)));
}

inline RationalRep regular_rep(const FiniteGroup& g) { return RationalRep(g, regular_images(g)); }

/// Permutation representation from an action on 0..n-1.
inline RationalRep permutation_rep(const FiniteGroup& g, int npoints,
                                   const std::function<int(int, int)>& act) {
  return RationalRep(g, permutation_images(g, npoints, act));
}

/// Permutation representation of G on the cosets of the subgroup with the
/// given elements, coset representatives being lowest element indices.
inline RationalRep coset_rep(const FiniteGroup& g, const std::vector<int>& subgroup_elems) {
  std::vector<bool> in_sub(g.order, false);
  for (int s : subgroup_elems) in_sub[s] = true;
  std::vector<int> coset_of(g.order, -1), reps;
  for (int e = 0; e < g.order; ++e) {
    if (coset_of[e] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(e);
    for (int s = 0; s < g.order; ++s)
      if (in_sub[s]) coset_of[g.mul[e][s]] = c;
  }
  return permutation_rep(g, static_cast<int>(reps.size()),
                         [&g, &coset_of, &reps](int e, int c) { return coset_of[g.mul[e][reps[c]]]; });
}

inline RationalRep rep_direct_sum(const RationalRep& a, const RationalRep& b) {
  if (a.group.mul != b.group.mul) throw parse_error("direct sum: representations of different groups");
  std::vector<QMat> images(a.group.order);
  for (int e = 0; e < a.group.order; ++e) {
    QMat m(a.dim + b.dim, a.dim + b.dim);
    m.set_block(0, 0, a.images[e]);
    m.set_block(a.dim, a.dim, b.images[e]);
    images[e] = std::move(m);
  }
  return RationalRep(a.group, std::move(images));
}

inline RationalRep rep_tensor(const RationalRep& a, const RationalRep& b) {
  if (a.group.mul != b.group.mul) throw parse_error("tensor: representations of different groups");
  std::vector<QMat> images(a.group.order);
  for (int e = 0; e < a.group.order; ++e) {
    QMat m(a.dim * b.dim, a.dim * b.dim);
    for (int i = 0; i < a.dim; ++i)
      for (int j = 0; j < a.dim; ++j)
        for (int k = 0; k < b.dim; ++k)
          for (int l = 0; l < b.dim; ++l)
            m(i * b.dim + k, j * b.dim + l) = a.images[e](i, j) * b.images[e](k, l);
    images[e] = std::move(m);
  }
  return RationalRep(a.group, std::move(images));
}

/// Recovers the multiplication table of a one-object groupoid.
inline FiniteGroup group_of_delooping(const Gptr& bg) {
  if (bg->num_objects() != 1) throw parse_error("group of delooping: not a one-object groupoid");
  FiniteGroup g;
  g.order = bg->num_morphisms();
  g.identity = bg->identity_at(0);
  g.mul.assign(g.order, std::vector<int>(g.order));
  g.inv.resize(g.order);
  for (int a = 0; a < g.order; ++a) {
    g.inv[a] = bg->inverse_of(a);
    for (int b = 0; b < g.order; ++b) g.mul[a][b] = bg->compose(a, b);
  }
  return g;
}

inline Rational trace(const QMat& m) {
  Rational t = 0;
  for (int i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

namespace detail {

/// Character as a class function on the given loop groupoid of BG: the value
/// on a component is the trace of the image of its loop label, evaluated at
/// every member object to assert conjugation invariance.
inline ClassFunction character_on(const RationalRep& rho, const LoopGroupoid& lg) {
  Skeleton sk = skeletize(lg.grpd);
  std::vector<Rational> values(sk.num_components());
  std::vector<bool> seen(sk.num_components(), false);
  for (int w = 0; w < lg.grpd->num_objects(); ++w) {
    Rational t = trace(rho.images[lg.object_label[w].second]);
    int c = sk.component_of[w];
    if (seen[c]) {
      if (values[c] != t) throw theorem_violation("character: trace not constant on a class");
    } else {
      values[c] = t;
      seen[c] = true;
    }
  }
  return ClassFunction{lg.grpd, std::move(values)};
}

}  // namespace detail

/// Character of a representation as a class function on L BG (components =
/// conjugacy classes of G).
inline ClassFunction character(const RationalRep& rho) {
  return detail::character_on(rho, free_loop(delooping(rho.group)));
}

/// Character restricted to the p-power-order classes, as a class function
/// on the p-typical loop groupoid.
inline ClassFunction character_p(const RationalRep& rho, long p) {
  return detail::character_on(rho, p_free_loop(delooping(rho.group), p));
}

/// Induction along an injective map of deloopings, by the block construction
/// on coset representatives (lowest element per left coset of the image).
inline RationalRep induce(const GroupoidMap& h_in_g, const RationalRep& rho) {
  if (!is_injective_on_morphisms(h_in_g))
    throw parse_error("induce: map is not injective on morphisms");
  if (h_in_g.source->num_objects() != 1 || h_in_g.target->num_objects() != 1)
    throw parse_error("induce: expected a map of deloopings");
  if (static_cast<int>(h_in_g.mor_map.size()) != rho.group.order)
    throw parse_error("induce: representation does not match the subgroup");
  const auto& g = *h_in_g.target;
  int n = g.num_morphisms();
  std::vector<int> preimage(n, -1);
  for (int h = 0; h < rho.group.order; ++h) preimage[h_in_g.mor_map[h]] = h;

  std::vector<int> coset_of(n, -1), reps;
  for (int e = 0; e < n; ++e) {
    if (coset_of[e] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(e);
    for (int s = 0; s < n; ++s)
      if (preimage[s] >= 0) coset_of[g.compose(e, s)] = c;
  }
  int k = static_cast<int>(reps.size());
  std::vector<QMat> images(n);
  for (int e = 0; e < n; ++e) {
    QMat m(k * rho.dim, k * rho.dim);
    for (int j = 0; j < k; ++j) {
      int moved = g.compose(e, reps[j]);
      int i = coset_of[moved];
      int h = preimage[g.compose(g.inverse_of(reps[i]), moved)];
      if (h < 0) throw theorem_violation("induce: coset bookkeeping failed");
      m.set_block(i * rho.dim, j * rho.dim, rho.images[h]);
    }
    images[e] = std::move(m);
  }
  return RationalRep(group_of_delooping(h_in_g.target), std::move(images));
}

/// Induction of class functions by integration along the loop map: the
/// classical induced character formula falls out of summing over homotopy
/// fiber components weighted by 1/|Aut|.
inline ClassFunction induced_character_via_integration(const GroupoidMap& h_in_g,
                                                       const ClassFunction& chi) {
  return integrate(free_loop_map(h_in_g), chi);
}

/// Outcome of a character-compatibility check, with both sides per class.
struct SquareReport {
  bool ok = false;
  std::vector<Rational> via_representations;  // character of the induced rep
  std::vector<Rational> via_integration;      // induced class function
};

/// Checks character(induce(rho)) = integration-induction of character(rho),
/// class by class.
inline SquareReport verify_induction_square(const GroupoidMap& h_in_g, const RationalRep& rho) {
  SquareReport rep;
  rep.via_representations = character(induce(h_in_g, rho)).values;
  rep.via_integration = induced_character_via_integration(h_in_g, character(rho)).values;
  rep.ok = rep.via_representations == rep.via_integration;
  return rep;
}

/// The same square restricted to p-power-order classes, with the p-typical
/// loop map in place of the free one.
inline SquareReport p_typical_character_square(const GroupoidMap& h_in_g, const RationalRep& rho,
                                               long p) {
  PAdicLoopParams params{p, 1};
  params.validate();
  SquareReport rep;
  rep.via_representations = character_p(induce(h_in_g, rho), p).values;
  rep.via_integration = integrate(loop_map(h_in_g, params), character_p(rho, p)).values;
  rep.ok = rep.via_representations == rep.via_integration;
  return rep;
}

/// Height-n cardinality at the prime p: the plain cardinality of the
/// n-fold p-typical loop groupoid. For n >= 1 the result is asserted to be
/// p-locally integral (denominator coprime to p); at height 0 the value is
/// the plain homotopy cardinality, which need not be.
inline Rational chromatic_cardinality(const Gptr& x, long p, int n) {
  PAdicLoopParams params{p, n};
  params.validate();
  Rational out = cardinality(iterated_p_free_loop(x, params));
  if (n >= 1 && !is_p_local_integer(out, p))
    throw theorem_violation("chromatic cardinality: denominator not coprime to p");
  return out;
}

/// Independent count: n-tuples of pairwise commuting p-power-order elements
/// of G, divided by |G|.
inline Rational chromatic_cardinality_oracle(const FiniteGroup& g, long p, int n) {
  PAdicLoopParams params{p, n};
  params.validate();
  std::vector<int> pelems;
  for (int e = 0; e < g.order; ++e)
    if (is_p_power(g.element_order(e), static_cast<int>(p))) pelems.push_back(e);
  Integer count = 0;
  std::vector<int> tuple(n);
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      ++count;
      return;
    }
    for (int e : pelems) {
      bool ok = true;
      for (int i = 0; i < k; ++i)
        if (!g.commute(tuple[i], e)) {
          ok = false;
          break;
        }
      if (ok) {
        tuple[k] = e;
        rec(k + 1);
      }
    }
  };
  rec(0);
  return Rational(count, Integer(g.order));
}

}  // namespace grpd
