#pragma once

#include "grpd/map.hpp"

#include <map>
#include <tuple>
#include <vector>

namespace grpd {

/// Homotopy pullback of f: X -> Z <- Y :g. Objects are triples
/// (x, y, phi: f(x) -> g(y)), morphisms are pairs (alpha, beta) with
/// phi' . f(alpha) = g(beta) . phi. Objects are enumerated in lexicographic
/// (x, y, phi) order and morphisms in lexicographic (source object, alpha,
/// beta) order, so the construction is deterministic.
struct Pullback {
  Gptr total;
  GroupoidMap to_left;    // projection to the source of f
  GroupoidMap to_right;   // projection to the source of g
  std::vector<int> connecting;  // per apex object: phi, a morphism of Z
  // per apex object, the (x, y) pair is recoverable from the projections.

  int object_index(int x, int y, int phi) const {
    auto it = index_.find({x, y, phi});
    return it == index_.end() ? -1 : it->second;
  }

  std::map<std::tuple<int, int, int>, int> index_;
};

inline Pullback homotopy_pullback(const GroupoidMap& f, const GroupoidMap& g) {
  if (!same_groupoid(f.target, g.target))
    throw parse_error("homotopy pullback: maps must share a target");
  const auto& x = *f.source;
  const auto& y = *g.source;
  const auto& z = *f.target;

  Pullback pb;
  std::vector<std::tuple<int, int, int>> objs;
  for (int xo = 0; xo < x.num_objects(); ++xo)
    for (int yo = 0; yo < y.num_objects(); ++yo)
      for (int phi : z.hom(f.obj_map[xo], g.obj_map[yo])) {
        pb.index_[{xo, yo, phi}] = static_cast<int>(objs.size());
        objs.emplace_back(xo, yo, phi);
      }

  int nobj = static_cast<int>(objs.size());
  std::vector<int> msrc, mtgt, mleft, mright;
  const uint64_t mx = x.num_morphisms() ? x.num_morphisms() : 1;
  const uint64_t my = y.num_morphisms() ? y.num_morphisms() : 1;
  auto mkey = [my, mx](int so, int alpha, int beta) {
    return (static_cast<uint64_t>(so) * mx + alpha) * my + beta;
  };
  std::unordered_map<uint64_t, int> mor_index;  // (src obj, alpha, beta)
  for (int so = 0; so < nobj; ++so) {
    auto [xo, yo, phi] = objs[so];
    for (int alpha : x.out_of(xo))
      for (int beta : y.out_of(yo)) {
        // target pair and the transported connecting morphism
        int phi2 = z.compose(z.compose(g.mor_map[beta], phi), z.inverse_of(f.mor_map[alpha]));
        int to = pb.object_index(x.tgt(alpha), y.tgt(beta), phi2);
        if (to < 0) continue;  // cannot happen; hom sets are closed
        mor_index[mkey(so, alpha, beta)] = static_cast<int>(msrc.size());
        msrc.push_back(so);
        mtgt.push_back(to);
        mleft.push_back(alpha);
        mright.push_back(beta);
      }
  }

  int nmor = static_cast<int>(msrc.size());
  std::vector<int> id(nobj), inv(nmor);
  for (int o = 0; o < nobj; ++o) {
    auto [xo, yo, phi] = objs[o];
    id[o] = mor_index.at(mkey(o, x.identity_at(xo), y.identity_at(yo)));
  }
  for (int m = 0; m < nmor; ++m)
    inv[m] = mor_index.at(mkey(mtgt[m], x.inverse_of(mleft[m]), y.inverse_of(mright[m])));
  std::unordered_map<uint64_t, int> comp;
  comp.reserve(msrc.size());
  std::vector<std::vector<int>> out_by_src(nobj);
  for (int m = 0; m < nmor; ++m) out_by_src[msrc[m]].push_back(m);
  for (int m1 = 0; m1 < nmor; ++m1)
    for (int m2 : out_by_src[mtgt[m1]])
      comp[static_cast<uint64_t>(m2) * nmor + m1] = mor_index.at(
          mkey(msrc[m1], x.compose(mleft[m2], mleft[m1]), y.compose(mright[m2], mright[m1])));

  pb.total = std::make_shared<FiniteGroupoid>(
      FiniteGroupoid::build_trusted(nobj, msrc, mtgt, id, inv, comp));
  pb.connecting.resize(nobj);
  std::vector<int> oleft(nobj), oright(nobj);
  for (int o = 0; o < nobj; ++o) {
    auto [xo, yo, phi] = objs[o];
    oleft[o] = xo;
    oright[o] = yo;
    pb.connecting[o] = phi;
  }
  pb.to_left = GroupoidMap::trusted(pb.total, f.source, oleft, mleft);
  pb.to_right = GroupoidMap::trusted(pb.total, g.source, oright, mright);
  return pb;
}

/// Homotopy fiber of f over object y of its target: the pullback of f
/// against the point inclusion at y. `phi[w]`: f(x_w) -> y in the target.
struct Fiber {
  Gptr grpd;
  GroupoidMap to_source;     // projection to the source of f
  std::vector<int> phi;      // per fiber object: connecting morphism into y
  std::vector<int> base_object;  // per fiber object: the object of source(f)

  /// Fiber object with the given source object and connecting morphism,
  /// or -1 when absent.
  int object_index(int x, int conn) const {
    auto it = index_.find({x, conn});
    return it == index_.end() ? -1 : it->second;
  }

  std::map<std::pair<int, int>, int> index_;
};

inline Fiber homotopy_fiber(const GroupoidMap& f, int y) {
  if (y < 0 || y >= f.target->num_objects())
    throw parse_error("homotopy fiber: object index out of range");
  Pullback pb = homotopy_pullback(f, point_inclusion(point_groupoid(), f.target, y));
  Fiber fib;
  fib.grpd = pb.total;
  fib.to_source = pb.to_left;
  fib.phi = pb.connecting;
  fib.base_object = pb.to_left.obj_map;
  for (int w = 0; w < fib.grpd->num_objects(); ++w)
    fib.index_[{fib.base_object[w], fib.phi[w]}] = w;
  return fib;
}

/// A homotopy pullback square, kept together with the maps that induced it.
struct PullbackSquare {
  GroupoidMap f;  // X -> Y
  GroupoidMap g;  // Z -> Y
  Pullback pb;    // X x_Y Z with projections and connecting isos
};

inline PullbackSquare make_pullback_square(const GroupoidMap& f, const GroupoidMap& g) {
  return PullbackSquare{f, g, homotopy_pullback(f, g)};
}

/// The diagonal X -> X x_Y X over f, sending x to (x, x, id) and a to (a, a).
inline GroupoidMap diagonal_map(const GroupoidMap& f, const Pullback& self_pb) {
  const auto& x = *f.source;
  std::vector<int> omap(x.num_objects()), mmap(x.num_morphisms());
  for (int o = 0; o < x.num_objects(); ++o) {
    omap[o] = self_pb.object_index(o, o, f.target->identity_at(f.obj_map[o]));
    if (omap[o] < 0) throw theorem_violation("diagonal: object not found in pullback");
  }
  // Morphism (a, a) out of Delta(src a); locate by scanning the hom set.
  for (int a = 0; a < x.num_morphisms(); ++a) {
    int so = omap[x.src(a)], to = omap[x.tgt(a)];
    int found = -1;
    for (int m : self_pb.total->hom(so, to))
      if (self_pb.to_left.mor_map[m] == a && self_pb.to_right.mor_map[m] == a) {
        found = m;
        break;
      }
    if (found < 0) throw theorem_violation("diagonal: morphism not found in pullback");
    mmap[a] = found;
  }
  return GroupoidMap(f.source, self_pb.total, std::move(omap), std::move(mmap));
}

}  // namespace grpd
