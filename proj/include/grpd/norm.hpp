#pragma once

#include "grpd/adjunction.hpp"

#include <utility>
#include <vector>

namespace grpd {

/// The structural norm of f: X -> Y at a local system F on X, with all
/// intermediate data. Writing P for the self pullback of f with projections
/// pi1, pi2 and diagonal D, and D_f F := pi1_* D_! F, the norm is the
/// composite
///
///   f_! D_f F  ->  f_* f^* f_! D_f F            (unit of the limit adjunction)
///              ->  f_* pi2_! pi1^* D_f F        (inverse colimit base change)
///              ->  f_* pi2_! D_! F              (counit of the limit adjunction)
///              ->  f_* F                        (pi2 . D = id on the nose)
struct NormData {
  PullbackSquare sq;            // self pullback of f
  GroupoidMap diag;             // X -> P
  PushforwardData push_diag;    // D_! F
  PushforwardData dual;         // pi1_* D_! F = D_f F
  PushforwardData push_dual;    // f_! D_f F
  PushforwardData push_star;    // f_* F
  LinearMapOfSystems norm;      // f_! D_f F -> f_* F
};

inline NormData norm_structural(const GroupoidMap& f, const LocalSystem& sys) {
  NormData nd;
  nd.sq = make_pullback_square(f, f);
  const GroupoidMap& pi1 = nd.sq.pb.to_left;
  const GroupoidMap& pi2 = nd.sq.pb.to_right;
  nd.diag = diagonal_map(f, nd.sq.pb);

  nd.push_diag = pushforward_left(nd.diag, sys);
  nd.dual = pushforward_right(pi1, nd.push_diag.system);
  nd.push_dual = pushforward_left(f, nd.dual.system);
  nd.push_star = pushforward_right(f, sys);

  // Unit at f_! D_f F.
  PushforwardData pr_unit = pushforward_right(f, pullback_system(f, nd.push_dual.system));
  LinearMapOfSystems m1 = unit_star(f, nd.push_dual.system, pr_unit);

  // Inverse base change, pushed forward along f.
  PushforwardData push_pi2 = pushforward_left(pi2, pullback_system(pi1, nd.dual.system));
  LinearMapOfSystems bc = beck_chevalley_shriek(nd.sq, nd.dual.system, nd.push_dual, push_pi2);
  PushforwardData pr_mid = pushforward_right(f, push_pi2.system);
  LinearMapOfSystems m2 = whisker_pushforward(pr_unit, pr_mid, bc.inverted());

  // Counit of pi1, whiskered by pi2_! and then f_*.
  LinearMapOfSystems cu = counit_star(pi1, nd.push_diag.system, nd.dual);
  PushforwardData push_dd = pushforward_left(pi2, nd.push_diag.system);
  LinearMapOfSystems inner = whisker_pushforward(push_pi2, push_dd, cu);
  PushforwardData pr_dd = pushforward_right(f, push_dd.system);
  LinearMapOfSystems m3 = whisker_pushforward(pr_mid, pr_dd, inner);

  // pi2 . D = id, so pi2_! D_! F is canonically F.
  GroupoidMap id_x = identity_map(f.source);
  PushforwardData push_id = pushforward_left(id_x, sys);
  LinearMapOfSystems iota = pushforward_left_compose_iso(push_id, nd.push_diag, push_dd);
  LinearMapOfSystems eps = counit_shriek(id_x, sys, push_id);
  LinearMapOfSystems collapse = compose_system_maps(eps, iota.inverted());
  LinearMapOfSystems m4 = whisker_pushforward(pr_dd, nd.push_star, collapse);

  nd.norm = compose_system_maps(m4, compose_system_maps(m3, compose_system_maps(m2, m1)));
  return nd;
}

struct ShriekToStar {
  PushforwardData push_left;    // f_! F
  PushforwardData push_right;   // f_* F
  LinearMapOfSystems map;       // f_! F -> f_* F, invertible
};

struct DualizingData {
  PushforwardData dual;             // D_f F
  LinearMapOfSystems comparison;    // D_f F -> F
};

inline DualizingData dualizing_comparison(const GroupoidMap& f, const LocalSystem& sys);

/// The canonical equivalence f_! F -> f_* F. For an equivalence f it is
/// assembled from the (invertible) units of both adjunctions; otherwise it
/// is the structural norm corrected by the comparison D_f F -> F. The
/// recursion is on the diagonal, which gains one level of truncation each
/// step and bottoms out at an equivalence.
inline ShriekToStar shriek_to_star(const GroupoidMap& f, const LocalSystem& sys) {
  ShriekToStar out;
  out.push_left = pushforward_left(f, sys);
  out.push_right = pushforward_right(f, sys);
  if (is_equivalence(f)) {
    LocalSystem back = pullback_system(f, out.push_left.system);
    PushforwardData pr_back = pushforward_right(f, back);
    LinearMapOfSystems u_star = unit_star(f, out.push_left.system, pr_back);
    LinearMapOfSystems u_shriek = unit_shriek(f, sys, out.push_left);
    LinearMapOfSystems down = whisker_pushforward(pr_back, out.push_right, u_shriek.inverted());
    out.map = compose_system_maps(down, u_star);
    return out;
  }
  NormData nd = norm_structural(f, sys);
  DualizingData dd = dualizing_comparison(f, sys);
  LinearMapOfSystems shifted = whisker_pushforward(nd.push_dual, out.push_left, dd.comparison);
  out.map = compose_system_maps(nd.norm, shifted.inverted());
  return out;
}

/// Comparison D_f F -> F: push the canonical D_! F -> D_* F forward along
/// pi1 and collapse pi1_* D_* F = (pi1 . D)_* F = id_* F = F.
inline DualizingData dualizing_comparison(const GroupoidMap& f, const LocalSystem& sys) {
  PullbackSquare sq = make_pullback_square(f, f);
  const GroupoidMap& pi1 = sq.pb.to_left;
  GroupoidMap diag = diagonal_map(f, sq.pb);

  ShriekToStar nu = shriek_to_star(diag, sys);
  DualizingData out;
  out.dual = pushforward_right(pi1, nu.push_left.system);
  PushforwardData pr_star = pushforward_right(pi1, nu.push_right.system);
  LinearMapOfSystems pushed = whisker_pushforward(out.dual, pr_star, nu.map);

  GroupoidMap id_x = identity_map(f.source);
  PushforwardData pr_id = pushforward_right(id_x, sys);
  LinearMapOfSystems iota = pushforward_right_compose_iso(pr_id, nu.push_right, pr_star);
  LinearMapOfSystems eps = counit_star(id_x, sys, pr_id);
  out.comparison =
      compose_system_maps(eps, compose_system_maps(iota.inverted(), pushed));
  return out;
}

/// Direct formula for the norm f_! F -> f_* F: at y, the block from fiber
/// object w to w' is the sum of F(a) over all fiber morphisms w -> w'. This
/// kills relations and lands in compatible families, so it descends and
/// corestricts to the presented values.
inline LinearMapOfSystems norm_direct(const GroupoidMap& f, const LocalSystem& sys,
                                      const PushforwardData& pf, const PushforwardData& pr) {
  if (!pf.left || pr.left || !same_map(pf.f, f) || !same_map(pr.f, f) ||
      !(pf.input == sys) || !(pr.input == sys))
    throw parse_error("direct norm: pushforward data mismatch");
  const auto& y = *f.target;
  std::vector<QMat> comps(y.num_objects());
  for (int yo = 0; yo < y.num_objects(); ++yo) {
    const Fiber& fib = pf.fibers[yo];
    const auto& fg = *fib.grpd;
    QMat big(pf.ambient[yo], pf.ambient[yo]);
    for (int m = 0; m < fg.num_morphisms(); ++m) {
      const QMat& a = sys.mats[fib.to_source.mor_map[m]];
      int r0 = pf.offset[yo][fg.tgt(m)], c0 = pf.offset[yo][fg.src(m)];
      for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) big(r0 + i, c0 + j) += a(i, j);
    }
    QMat image = big * pf.into[yo];
    comps[yo] = pr.onto[yo] * image;
    if (pr.into[yo] * comps[yo] != image)
      throw theorem_violation("direct norm: image is not a compatible family");
  }
  return LinearMapOfSystems(pf.system, pr.system, std::move(comps));
}

/// Homotopy cardinality recomputed by pure linear algebra: the composite
/// Q -> f_* Q -> f_! Q -> Q over f: X -> point, the middle arrow being the
/// inverse of the canonical f_! -> f_*.
inline Rational cardinality_linear(const Gptr& x) {
  Gptr pt = point_groupoid();
  GroupoidMap f = constant_map(x, pt);
  LocalSystem line = constant_system(x, 1);
  LocalSystem point_line = constant_system(pt, 1);

  ShriekToStar sts = shriek_to_star(f, line);
  LinearMapOfSystems up = unit_star(f, point_line, sts.push_right);
  LinearMapOfSystems down = counit_shriek(f, point_line, sts.push_left);
  LinearMapOfSystems total =
      compose_system_maps(down, compose_system_maps(sts.map.inverted(), up));
  return total.comps[0](0, 0);
}

}  // namespace grpd
