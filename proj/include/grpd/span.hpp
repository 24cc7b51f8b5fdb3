#pragma once

#include "grpd/matrix.hpp"
#include "grpd/pullback.hpp"
#include "grpd/skeleton.hpp"

#include <utility>
#include <vector>

namespace grpd {

/// Span of groupoids X <- apex -> Y.
struct Span {
  Gptr left_foot;
  Gptr right_foot;
  Gptr apex;
  GroupoidMap left_leg;
  GroupoidMap right_leg;

  void validate() const {
    if (!same_groupoid(left_leg.source, apex) || !same_groupoid(right_leg.source, apex) ||
        !same_groupoid(left_leg.target, left_foot) || !same_groupoid(right_leg.target, right_foot))
      throw parse_error("span: legs do not match the declared feet");
  }
};

inline Span span_identity(const Gptr& x) {
  GroupoidMap id = identity_map(x);
  return Span{x, x, x, id, id};
}

/// f viewed as the forward span X <- X -> Y (right leg f).
inline Span span_from_map_fwd(const GroupoidMap& f) {
  return Span{f.source, f.target, f.source, identity_map(f.source), f};
}

/// f viewed as the backward span Y <- X -> X (left leg f).
inline Span span_from_map_bwd(const GroupoidMap& f) {
  return Span{f.target, f.source, f.source, f, identity_map(f.source)};
}

/// Composition by homotopy pullback of the inner legs.
inline Span span_compose(const Span& s1, const Span& s2) {
  if (!same_groupoid(s1.right_foot, s2.left_foot))
    throw parse_error("span composition: foot mismatch");
  Pullback pb = homotopy_pullback(s1.right_leg, s2.left_leg);
  return Span{s1.left_foot, s2.right_foot, pb.total,
              compose_maps(s1.left_leg, pb.to_left),
              compose_maps(s2.right_leg, pb.to_right)};
}

/// Class function: one exact rational per component of a groupoid, indexed
/// by its skeleton.
struct ClassFunction {
  Gptr base;
  std::vector<Rational> values;
};

inline ClassFunction constant_class_function(const Gptr& x, const Rational& v) {
  return ClassFunction{x, std::vector<Rational>(skeletize(x).num_components(), v)};
}

/// Pullback of class functions: (restrict phi)([x]) = phi([f(x)]).
inline ClassFunction restrict_along(const GroupoidMap& f, const ClassFunction& phi) {
  Skeleton sx = skeletize(f.source), sy = skeletize(f.target);
  if (phi.values.size() != static_cast<size_t>(sy.num_components()) ||
      !same_groupoid(phi.base, f.target))
    throw parse_error("restrict: class function shape mismatch");
  ClassFunction out{f.source, {}};
  out.values.reserve(sx.num_components());
  for (const auto& c : sx.components)
    out.values.push_back(phi.values[sy.component_of[f.obj_map[c.rep]]]);
  return out;
}

/// Integration along f: at [y], the sum over components [w] of the homotopy
/// fiber at y of phi([w's image in X]) / |Aut_fiber(w)|. Evaluated at every
/// object of the target; agreement within components is asserted.
inline ClassFunction integrate(const GroupoidMap& f, const ClassFunction& phi) {
  Skeleton sx = skeletize(f.source), sy = skeletize(f.target);
  if (phi.values.size() != static_cast<size_t>(sx.num_components()) ||
      !same_groupoid(phi.base, f.source))
    throw parse_error("integrate: class function shape mismatch");
  std::vector<Rational> out(sy.num_components());
  std::vector<bool> seen(sy.num_components(), false);
  for (int y = 0; y < f.target->num_objects(); ++y) {
    Fiber fib = homotopy_fiber(f, y);
    Skeleton sf = skeletize(fib.grpd);
    Rational total = 0;
    for (const auto& c : sf.components)
      total += phi.values[sx.component_of[fib.base_object[c.rep]]] * Rational(1, c.aut.order);
    int comp = sy.component_of[y];
    if (seen[comp]) {
      if (out[comp] != total)
        throw theorem_violation("integrate: value depends on the representative");
    } else {
      out[comp] = total;
      seen[comp] = true;
    }
  }
  return ClassFunction{f.target, std::move(out)};
}

/// Pointwise product of class functions on the same base.
inline ClassFunction pointwise_product(const ClassFunction& a, const ClassFunction& b) {
  if (!same_groupoid(a.base, b.base) || a.values.size() != b.values.size())
    throw parse_error("class function product: base mismatch");
  ClassFunction out = a;
  for (size_t i = 0; i < out.values.size(); ++i) out.values[i] *= b.values[i];
  return out;
}

/// Matrix of (integrate along the right leg) . (restrict along the left
/// leg), from class functions on the left foot to those on the right foot.
inline QMat linearize(const Span& s) {
  s.validate();
  int cols = skeletize(s.left_foot).num_components();
  int rows = skeletize(s.right_foot).num_components();
  QMat m(rows, cols);
  for (int j = 0; j < cols; ++j) {
    ClassFunction basis{s.left_foot, std::vector<Rational>(cols)};
    basis.values[j] = 1;
    ClassFunction col = integrate(s.right_leg, restrict_along(s.left_leg, basis));
    for (int i = 0; i < rows; ++i) m(i, j) = col.values[i];
  }
  return m;
}

}  // namespace grpd
