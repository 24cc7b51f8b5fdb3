#pragma once

#include "grpd/pushforward.hpp"

#include <utility>
#include <vector>

namespace grpd {

/// Unit F -> f_* f^* F. `pr` must be the limit pushforward of f^*F along f.
/// At y, a vector v spreads out to the compatible family whose component at
/// the fiber object (x, phi) is F(phi)^{-1} v.
inline LinearMapOfSystems unit_star(const GroupoidMap& f, const LocalSystem& sys,
                                    const PushforwardData& pr) {
  if (pr.left || !same_map(pr.f, f) || !(pr.input == pullback_system(f, sys)))
    throw parse_error("unit (limit): pushforward data mismatch");
  const auto& y = *f.target;
  std::vector<QMat> comps(y.num_objects());
  for (int yo = 0; yo < y.num_objects(); ++yo) {
    const Fiber& fib = pr.fibers[yo];
    QMat family(pr.ambient[yo], sys.dims[yo]);
    for (int w = 0; w < fib.grpd->num_objects(); ++w)
      family.set_block(pr.offset[yo][w], 0, inverse(sys.mats[fib.phi[w]]));
    comps[yo] = pr.onto[yo] * family;
  }
  return LinearMapOfSystems(sys, pr.system, std::move(comps));
}

/// Counit f^* f_* G -> G: at x, read the component of a compatible family at
/// the fiber object (x, id).
inline LinearMapOfSystems counit_star(const GroupoidMap& f, const LocalSystem& sys,
                                      const PushforwardData& pr) {
  if (pr.left || !same_map(pr.f, f) || !(pr.input == sys))
    throw parse_error("counit (limit): pushforward data mismatch");
  const auto& x = *f.source;
  std::vector<QMat> comps(x.num_objects());
  for (int xo = 0; xo < x.num_objects(); ++xo) {
    int yo = f.obj_map[xo];
    int w = pr.fibers[yo].object_index(xo, f.target->identity_at(yo));
    if (w < 0) throw theorem_violation("counit (limit): fiber object missing");
    comps[xo] = pr.into[yo].block(pr.offset[yo][w], 0, sys.dims[xo], pr.system.dims[yo]);
  }
  return LinearMapOfSystems(pullback_system(f, pr.system), sys, std::move(comps));
}

/// Unit G -> f^* f_! G: at x, include the block at the fiber object (x, id)
/// and project to the colimit.
inline LinearMapOfSystems unit_shriek(const GroupoidMap& f, const LocalSystem& sys,
                                      const PushforwardData& pf) {
  if (!pf.left || !same_map(pf.f, f) || !(pf.input == sys))
    throw parse_error("unit (colimit): pushforward data mismatch");
  const auto& x = *f.source;
  std::vector<QMat> comps(x.num_objects());
  for (int xo = 0; xo < x.num_objects(); ++xo) {
    int yo = f.obj_map[xo];
    int w = pf.fibers[yo].object_index(xo, f.target->identity_at(yo));
    if (w < 0) throw theorem_violation("unit (colimit): fiber object missing");
    comps[xo] = pf.onto[yo].block(0, pf.offset[yo][w], pf.system.dims[yo], sys.dims[xo]);
  }
  return LinearMapOfSystems(sys, pullback_system(f, pf.system), std::move(comps));
}

/// Counit f_! f^* F -> F: the block at (x, phi) maps by F(phi); this kills
/// every relation, so it descends to the colimit via the canonical section.
inline LinearMapOfSystems counit_shriek(const GroupoidMap& f, const LocalSystem& sys,
                                        const PushforwardData& pf) {
  if (!pf.left || !same_map(pf.f, f) || !(pf.input == pullback_system(f, sys)))
    throw parse_error("counit (colimit): pushforward data mismatch");
  const auto& y = *f.target;
  std::vector<QMat> comps(y.num_objects());
  for (int yo = 0; yo < y.num_objects(); ++yo) {
    const Fiber& fib = pf.fibers[yo];
    QMat fold(sys.dims[yo], pf.ambient[yo]);
    for (int w = 0; w < fib.grpd->num_objects(); ++w)
      fold.set_block(0, pf.offset[yo][w], sys.mats[fib.phi[w]]);
    comps[yo] = fold * pf.into[yo];
  }
  return LinearMapOfSystems(pf.system, sys, std::move(comps));
}

/// Colimit base change map for a homotopy pullback square
///
///       P --pi_X--> X
///       |           |
///     pi_Z          f        pi_Z! pi_X^* F  ->  g^* f_! F
///       v           v
///       Z ---g----> Y
///
/// `pf_f` presents f_! F and `pf_pi` presents pi_Z! pi_X^* F. At z, the
/// block of the fiber object ((x, z', phi), psi) of pi_Z is sent identically
/// to the block of the fiber object (x, g(psi) . phi) of f over g(z).
inline LinearMapOfSystems beck_chevalley_shriek(const PullbackSquare& sq, const LocalSystem& sys,
                                                const PushforwardData& pf_f,
                                                const PushforwardData& pf_pi) {
  if (!pf_f.left || !pf_pi.left || !same_map(pf_f.f, sq.f) ||
      !same_map(pf_pi.f, sq.pb.to_right) || !(pf_f.input == sys) ||
      !(pf_pi.input == pullback_system(sq.pb.to_left, sys)))
    throw parse_error("base change (colimit): pushforward data mismatch");
  const GroupoidMap& g = sq.g;
  const auto& z = *g.source;
  std::vector<QMat> comps(z.num_objects());
  for (int zo = 0; zo < z.num_objects(); ++zo) {
    int yo = g.obj_map[zo];
    const Fiber& fib = pf_pi.fibers[zo];
    QMat reassign(pf_f.ambient[yo], pf_pi.ambient[zo]);
    for (int u = 0; u < fib.grpd->num_objects(); ++u) {
      int p = fib.base_object[u];
      int xo = sq.pb.to_left.obj_map[p];
      int conn = g.target->compose(g.mor_map[fib.phi[u]], sq.pb.connecting[p]);
      int w = pf_f.fibers[yo].object_index(xo, conn);
      if (w < 0) throw theorem_violation("base change (colimit): fiber object missing");
      int d = sys.dims[xo];
      reassign.set_block(pf_f.offset[yo][w], pf_pi.offset[zo][u], QMat::identity(d));
    }
    comps[zo] = pf_f.onto[yo] * (reassign * pf_pi.into[zo]);
  }
  return LinearMapOfSystems(pf_pi.system, pullback_system(g, pf_f.system), std::move(comps));
}

/// Limit base change map g^* f_* F -> pi_Z* pi_X^* F for the same square:
/// the component of a compatible family at ((x, z', phi), psi) is its
/// component at (x, g(psi) . phi).
inline LinearMapOfSystems beck_chevalley_star(const PullbackSquare& sq, const LocalSystem& sys,
                                              const PushforwardData& pr_f,
                                              const PushforwardData& pr_pi) {
  if (pr_f.left || pr_pi.left || !same_map(pr_f.f, sq.f) ||
      !same_map(pr_pi.f, sq.pb.to_right) || !(pr_f.input == sys) ||
      !(pr_pi.input == pullback_system(sq.pb.to_left, sys)))
    throw parse_error("base change (limit): pushforward data mismatch");
  const GroupoidMap& g = sq.g;
  const auto& z = *g.source;
  std::vector<QMat> comps(z.num_objects());
  for (int zo = 0; zo < z.num_objects(); ++zo) {
    int yo = g.obj_map[zo];
    const Fiber& fib = pr_pi.fibers[zo];
    QMat restricted(pr_pi.ambient[zo], pr_f.system.dims[yo]);
    for (int u = 0; u < fib.grpd->num_objects(); ++u) {
      int p = fib.base_object[u];
      int xo = sq.pb.to_left.obj_map[p];
      int conn = g.target->compose(g.mor_map[fib.phi[u]], sq.pb.connecting[p]);
      int w = pr_f.fibers[yo].object_index(xo, conn);
      if (w < 0) throw theorem_violation("base change (limit): fiber object missing");
      int d = sys.dims[xo];
      restricted.set_block(pr_pi.offset[zo][u], 0,
                           pr_f.into[yo].block(pr_f.offset[yo][w], 0, d, pr_f.system.dims[yo]));
    }
    comps[zo] = pr_pi.onto[zo] * restricted;
  }
  return LinearMapOfSystems(pullback_system(g, pr_f.system), pr_pi.system, std::move(comps));
}

}  // namespace grpd
