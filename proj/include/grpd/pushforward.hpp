#pragma once

#include "grpd/local_system.hpp"
#include "grpd/pullback.hpp"

#include <utility>
#include <vector>

namespace grpd {

/// Pushforward of a local system along f: X -> Y, in either variance:
/// `left` gives the colimit over each homotopy fiber (lower shriek), else
/// the limit (lower star). The value at y is presented inside the ambient
/// space formed by the blocks of all fiber objects:
///   into[y]: value -> ambient,  onto[y]: ambient -> value,
/// with onto . into = I. For limits `into` parametrises the compatible
/// families and `onto` reads off canonical coordinates; for colimits `onto`
/// is the quotient projection and `into` a canonical section.
///
/// Presentations are per fiber component: a spanning tree transports every
/// block to the lowest object of its component, where the value reduces to
/// automorphism invariants (limit) or coinvariants (colimit). This keeps
/// all eliminations at the dimension of a single block.
struct PushforwardData {
  bool left = false;
  GroupoidMap f;
  LocalSystem input;   // on the source of f
  LocalSystem system;  // on the target of f
  std::vector<Fiber> fibers;            // per target object
  std::vector<std::vector<int>> offset; // per target object, per fiber object
  std::vector<int> ambient;             // per target object
  std::vector<QMat> into;               // per target object: ambient x value
  std::vector<QMat> onto;               // per target object: value x ambient
};

namespace detail {

/// Components of a fiber in object order; per component the lowest object is
/// the representative and tree[w] transports the block at the representative
/// to the block at w (matrix of the tree path under the given system data).
struct FiberTransport {
  std::vector<int> comp_of;   // per fiber object
  std::vector<int> reps;      // per component, ascending
  std::vector<QMat> tree;     // per fiber object: block(rep) -> block(w)
};

inline FiberTransport fiber_transport(const Fiber& fib, const LocalSystem& input) {
  const auto& g = *fib.grpd;
  FiberTransport t;
  t.comp_of.assign(g.num_objects(), -1);
  t.tree.resize(g.num_objects());
  for (int start = 0; start < g.num_objects(); ++start) {
    if (t.comp_of[start] >= 0) continue;
    int comp = static_cast<int>(t.reps.size());
    t.reps.push_back(start);
    t.comp_of[start] = comp;
    t.tree[start] = QMat::identity(input.dims[fib.base_object[start]]);
    std::vector<int> queue{start};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int w = queue[qi];
      for (int m : g.out_of(w)) {
        int w2 = g.tgt(m);
        if (t.comp_of[w2] >= 0) continue;
        t.comp_of[w2] = comp;
        t.tree[w2] = input.mats[fib.to_source.mor_map[m]] * t.tree[w];
        queue.push_back(w2);
      }
    }
  }
  return t;
}

}  // namespace detail

inline PushforwardData pushforward(const GroupoidMap& f, const LocalSystem& input, bool left) {
  if (!same_groupoid(input.base, f.source))
    throw parse_error("pushforward: system not on the source of the map");
  PushforwardData out;
  out.left = left;
  out.f = f;
  out.input = input;
  const auto& y = *f.target;
  out.fibers.reserve(y.num_objects());
  out.offset.resize(y.num_objects());
  out.ambient.resize(y.num_objects());
  out.into.resize(y.num_objects());
  out.onto.resize(y.num_objects());
  std::vector<int> dims(y.num_objects());

  for (int yo = 0; yo < y.num_objects(); ++yo) {
    out.fibers.push_back(homotopy_fiber(f, yo));
    const Fiber& fib = out.fibers.back();
    const auto& fg = *fib.grpd;
    auto& off = out.offset[yo];
    off.resize(fg.num_objects());
    int n = 0;
    for (int w = 0; w < fg.num_objects(); ++w) {
      off[w] = n;
      n += input.dims[fib.base_object[w]];
    }
    out.ambient[yo] = n;

    detail::FiberTransport ft = detail::fiber_transport(fib, input);
    // Per component: invariants / coinvariants of the automorphisms at the
    // representative, then transport along the tree.
    std::vector<QMat> comp_into, comp_onto;  // at the representative block
    for (int rep : ft.reps) {
      int d = input.dims[fib.base_object[rep]];
      std::vector<int> aut = fg.hom(rep, rep);
      if (left) {
        QMat rel(d, d * static_cast<int>(aut.size()));
        int col = 0;
        for (int a : aut) {
          rel.set_block(0, col, input.mats[fib.to_source.mor_map[a]] - QMat::identity(d));
          col += d;
        }
        QuotientPresentation qp = quotient_presentation(rel);
        comp_onto.push_back(qp.proj);
        comp_into.push_back(qp.sect);
      } else {
        QMat con(d * static_cast<int>(aut.size()), d);
        int row = 0;
        for (int a : aut) {
          con.set_block(row, 0, input.mats[fib.to_source.mor_map[a]] - QMat::identity(d));
          row += d;
        }
        KernelBasis kb = kernel_basis(con);
        comp_into.push_back(kb.basis);
        QMat sel(static_cast<int>(kb.free.size()), d);
        for (size_t k = 0; k < kb.free.size(); ++k) sel(static_cast<int>(k), kb.free[k]) = 1;
        comp_onto.push_back(sel);
      }
    }
    std::vector<int> comp_off(ft.reps.size() + 1, 0);
    for (size_t c = 0; c < ft.reps.size(); ++c)
      comp_off[c + 1] = comp_off[c] + comp_into[c].cols();
    int d = comp_off.back();
    dims[yo] = d;

    // into: at fiber object w of component c, transport the representative
    // presentation along the tree. For limits this enumerates the compatible
    // families; for colimits it embeds the section at the representative.
    out.into[yo] = QMat(n, d);
    if (left) {
      for (size_t c = 0; c < ft.reps.size(); ++c)
        out.into[yo].set_block(off[ft.reps[c]], comp_off[c], comp_into[c]);
    } else {
      for (int w = 0; w < fg.num_objects(); ++w) {
        int c = ft.comp_of[w];
        out.into[yo].set_block(off[w], comp_off[c], ft.tree[w] * comp_into[c]);
      }
    }
    // onto: for colimits, transport each block back to the representative
    // and project to coinvariants (this kills every relation); for limits,
    // read the invariant coordinates off the representative block.
    out.onto[yo] = QMat(d, n);
    if (left) {
      for (int w = 0; w < fg.num_objects(); ++w) {
        int c = ft.comp_of[w];
        out.onto[yo].set_block(comp_off[c], off[w], comp_onto[c] * inverse(ft.tree[w]));
      }
    } else {
      for (size_t c = 0; c < ft.reps.size(); ++c)
        out.onto[yo].set_block(comp_off[c], off[ft.reps[c]], comp_onto[c]);
    }
  }

  // Functorial transport along morphisms of the target: a morphism b: y -> y'
  // sends the fiber object (x, phi) to (x, b . phi), identically on blocks.
  std::vector<QMat> mats(y.num_morphisms());
  for (int b = 0; b < y.num_morphisms(); ++b) {
    int ys = y.src(b), yt = y.tgt(b);
    // onto[yt] with its columns pulled back along the object reassignment.
    QMat rearranged(dims[yt], out.ambient[ys]);
    const Fiber& fs = out.fibers[ys];
    for (int w = 0; w < fs.grpd->num_objects(); ++w) {
      int w2 = out.fibers[yt].object_index(fs.base_object[w], y.compose(b, fs.phi[w]));
      if (w2 < 0) throw theorem_violation("pushforward: fiber transport misses an object");
      int width = input.dims[fs.base_object[w]];
      rearranged.set_block(0, out.offset[ys][w],
                           out.onto[yt].block(0, out.offset[yt][w2], dims[yt], width));
    }
    mats[b] = rearranged * out.into[ys];
  }
  out.system = LocalSystem::trusted(f.target, std::move(dims), std::move(mats));
  return out;
}

inline PushforwardData pushforward_left(const GroupoidMap& f, const LocalSystem& input) {
  return pushforward(f, input, true);
}
inline PushforwardData pushforward_right(const GroupoidMap& f, const LocalSystem& input) {
  return pushforward(f, input, false);
}

inline bool same_map(const GroupoidMap& a, const GroupoidMap& b) {
  return same_groupoid(a.source, b.source) && same_groupoid(a.target, b.target) &&
         a.obj_map == b.obj_map && a.mor_map == b.mor_map;
}

/// Pushforward of a map of systems: f_! theta or f_* theta, presented on the
/// pushforwards `src` and `tgt` of its endpoint systems along the same map.
inline LinearMapOfSystems whisker_pushforward(const PushforwardData& src,
                                              const PushforwardData& tgt,
                                              const LinearMapOfSystems& theta) {
  if (src.left != tgt.left || !same_map(src.f, tgt.f))
    throw parse_error("pushforward of a map: mismatched pushforward data");
  if (!(theta.source == src.input) || !(theta.target == tgt.input))
    throw parse_error("pushforward of a map: data does not present the given map");
  const auto& y = *src.f.target;
  std::vector<QMat> comps(y.num_objects());
  for (int yo = 0; yo < y.num_objects(); ++yo) {
    const Fiber& fib = src.fibers[yo];
    QMat blockdiag(tgt.ambient[yo], src.ambient[yo]);
    for (int w = 0; w < fib.grpd->num_objects(); ++w)
      blockdiag.set_block(tgt.offset[yo][w], src.offset[yo][w], theta.comps[fib.base_object[w]]);
    comps[yo] = tgt.onto[yo] * (blockdiag * src.into[yo]);
  }
  return LinearMapOfSystems(src.system, tgt.system, std::move(comps));
}

/// Canonical identification (g . f)_! F -> g_!(f_! F), given the three
/// pushforwards involved. Throws if any component fails to be invertible.
inline LinearMapOfSystems pushforward_left_compose_iso(const PushforwardData& pf_gf,
                                                       const PushforwardData& pf_f,
                                                       const PushforwardData& pf_g) {
  if (!pf_gf.left || !pf_f.left || !pf_g.left)
    throw parse_error("composite identification: expected colimit pushforwards");
  if (!(pf_g.input == pf_f.system) || !(pf_gf.input == pf_f.input) ||
      !same_map(pf_gf.f, compose_maps(pf_g.f, pf_f.f)))
    throw parse_error("composite identification: data does not compose");
  const GroupoidMap& f = pf_f.f;
  const auto& z = *pf_g.f.target;
  std::vector<QMat> comps(z.num_objects());
  for (int zo = 0; zo < z.num_objects(); ++zo) {
    const Fiber& fib_gf = pf_gf.fibers[zo];
    const Fiber& fib_g = pf_g.fibers[zo];
    // Ambient of (g.f) at z -> ambient of g at z: the block of (x, phi) lands
    // in the outer block of (f x, phi) through the inner colimit at f x.
    QMat t(pf_g.ambient[zo], pf_gf.ambient[zo]);
    for (int u = 0; u < fib_gf.grpd->num_objects(); ++u) {
      int x = fib_gf.base_object[u];
      int yo = f.obj_map[x];
      int w_in = pf_f.fibers[yo].object_index(x, f.target->identity_at(yo));
      int w_out = fib_g.object_index(yo, fib_gf.phi[u]);
      if (w_in < 0 || w_out < 0)
        throw theorem_violation("composite identification: fiber object missing");
      int width = pf_gf.input.dims[x];
      t.set_block(pf_g.offset[zo][w_out], pf_gf.offset[zo][u],
                  pf_f.onto[yo].block(0, pf_f.offset[yo][w_in], pf_f.system.dims[yo], width));
    }
    comps[zo] = pf_g.onto[zo] * (t * pf_gf.into[zo]);
    if (!is_invertible(comps[zo]))
      throw theorem_violation("composite identification (colimit): component not invertible");
  }
  return LinearMapOfSystems(pf_gf.system, pf_g.system, std::move(comps));
}

/// Canonical identification (g . f)_* F -> g_*(f_* F).
inline LinearMapOfSystems pushforward_right_compose_iso(const PushforwardData& pf_gf,
                                                        const PushforwardData& pf_f,
                                                        const PushforwardData& pf_g) {
  if (pf_gf.left || pf_f.left || pf_g.left)
    throw parse_error("composite identification: expected limit pushforwards");
  if (!(pf_g.input == pf_f.system) || !(pf_gf.input == pf_f.input) ||
      !same_map(pf_gf.f, compose_maps(pf_g.f, pf_f.f)))
    throw parse_error("composite identification: data does not compose");
  const GroupoidMap& f = pf_f.f;
  const GroupoidMap& g = pf_g.f;
  const auto& z = *g.target;
  std::vector<QMat> comps(z.num_objects());
  for (int zo = 0; zo < z.num_objects(); ++zo) {
    const Fiber& fib_gf = pf_gf.fibers[zo];
    const Fiber& fib_g = pf_g.fibers[zo];
    int d1 = pf_gf.system.dims[zo];
    // A compatible family over the fiber of g.f restricts, at each outer
    // fiber object (y, psi), to a compatible family over the fiber of f at y:
    // the inner object (x, chi) reads the component at (x, psi . g(chi)).
    QMat b(pf_g.ambient[zo], d1);
    for (int w = 0; w < fib_g.grpd->num_objects(); ++w) {
      int yo = fib_g.base_object[w];
      const Fiber& fib_f = pf_f.fibers[yo];
      QMat fam(pf_f.ambient[yo], d1);
      for (int v = 0; v < fib_f.grpd->num_objects(); ++v) {
        int x = fib_f.base_object[v];
        int u = fib_gf.object_index(
            x, g.target->compose(fib_g.phi[w], g.mor_map[fib_f.phi[v]]));
        if (u < 0) throw theorem_violation("composite identification: fiber object missing");
        fam.set_block(pf_f.offset[yo][v], 0,
                      pf_gf.into[zo].block(pf_gf.offset[zo][u], 0, pf_gf.input.dims[x], d1));
      }
      b.set_block(pf_g.offset[zo][w], 0, pf_f.onto[yo] * fam);
    }
    comps[zo] = pf_g.onto[zo] * b;
    if (!is_invertible(comps[zo]))
      throw theorem_violation("composite identification (limit): component not invertible");
  }
  return LinearMapOfSystems(pf_gf.system, pf_g.system, std::move(comps));
}

}  // namespace grpd
