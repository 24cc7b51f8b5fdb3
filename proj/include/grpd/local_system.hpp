#pragma once

#include "grpd/group.hpp"
#include "grpd/map.hpp"
#include "grpd/matrix.hpp"

#include <utility>
#include <vector>

namespace grpd {

/// Local system of exact-rational vector spaces on a finite groupoid:
/// a dimension per object and an invertible matrix per morphism, strictly
/// functorial. Checked on construction.
struct LocalSystem {
  Gptr base;
  std::vector<int> dims;
  std::vector<QMat> mats;  // mats[m]: dims[src(m)] -> dims[tgt(m)]

  LocalSystem() = default;
  LocalSystem(Gptr b, std::vector<int> d, std::vector<QMat> m)
      : base(std::move(b)), dims(std::move(d)), mats(std::move(m)) {
    validate();
  }

  void validate() const {
    if (static_cast<int>(dims.size()) != base->num_objects() ||
        static_cast<int>(mats.size()) != base->num_morphisms())
      throw parse_error("local system: table size mismatch");
    for (int d : dims)
      if (d < 0) throw parse_error("local system: negative dimension");
    for (int m = 0; m < base->num_morphisms(); ++m)
      if (mats[m].rows() != dims[base->tgt(m)] || mats[m].cols() != dims[base->src(m)])
        throw parse_error("local system: matrix shape mismatch");
    for (int x = 0; x < base->num_objects(); ++x)
      if (!mats[base->identity_at(x)].is_identity())
        throw parse_error("local system: identity morphism not the identity matrix");
    for (int f = 0; f < base->num_morphisms(); ++f) {
      for (int g : base->out_of(base->tgt(f)))
        if (mats[base->compose(g, f)] != mats[g] * mats[f])
          throw parse_error("local system: not functorial");
      // invertibility follows from functoriality; assert anyway
      if (!(mats[base->inverse_of(f)] * mats[f]).is_identity())
        throw parse_error("local system: morphism matrix not invertible");
    }
  }

  bool operator==(const LocalSystem& o) const {
    return same_groupoid(base, o.base) && dims == o.dims && mats == o.mats;
  }

  /// For systems functorial by construction (restrictions of validated
  /// systems, pushforward values): validation is quadratic in hom-set sizes.
  static LocalSystem trusted(Gptr b, std::vector<int> d, std::vector<QMat> m) {
    LocalSystem s;
    s.base = std::move(b);
    s.dims = std::move(d);
    s.mats = std::move(m);
    return s;
  }
};

inline LocalSystem constant_system(const Gptr& x, int dim) {
  std::vector<QMat> mats(x->num_morphisms(), QMat::identity(dim));
  return LocalSystem(x, std::vector<int>(x->num_objects(), dim), std::move(mats));
}

/// f^*F: precomposition with f.
inline LocalSystem pullback_system(const GroupoidMap& f, const LocalSystem& sys) {
  if (!same_groupoid(sys.base, f.target))
    throw parse_error("pullback system: base mismatch");
  std::vector<int> dims(f.source->num_objects());
  std::vector<QMat> mats(f.source->num_morphisms());
  for (int x = 0; x < f.source->num_objects(); ++x) dims[x] = sys.dims[f.obj_map[x]];
  for (int m = 0; m < f.source->num_morphisms(); ++m) mats[m] = sys.mats[f.mor_map[m]];
  return LocalSystem::trusted(f.source, std::move(dims), std::move(mats));
}

/// Map of local systems on a shared base; naturality checked on build.
struct LinearMapOfSystems {
  LocalSystem source;
  LocalSystem target;
  std::vector<QMat> comps;  // per object

  LinearMapOfSystems() = default;
  LinearMapOfSystems(LocalSystem src, LocalSystem tgt, std::vector<QMat> c)
      : source(std::move(src)), target(std::move(tgt)), comps(std::move(c)) {
    validate();
  }

  void validate() const {
    if (!same_groupoid(source.base, target.base))
      throw parse_error("system map: bases differ");
    const auto& b = *source.base;
    if (static_cast<int>(comps.size()) != b.num_objects())
      throw parse_error("system map: component count mismatch");
    for (int x = 0; x < b.num_objects(); ++x)
      if (comps[x].rows() != target.dims[x] || comps[x].cols() != source.dims[x])
        throw parse_error("system map: component shape mismatch");
    for (int m = 0; m < b.num_morphisms(); ++m)
      if (comps[b.tgt(m)] * source.mats[m] != target.mats[m] * comps[b.src(m)])
        throw theorem_violation("system map: naturality square fails");
  }

  bool invertible() const {
    for (const auto& c : comps)
      if (!is_invertible(c)) return false;
    return true;
  }

  LinearMapOfSystems inverted() const {
    std::vector<QMat> inv;
    inv.reserve(comps.size());
    for (const auto& c : comps) inv.push_back(inverse(c));
    return LinearMapOfSystems(target, source, std::move(inv));
  }
};

inline LinearMapOfSystems identity_map_of(const LocalSystem& sys) {
  std::vector<QMat> comps;
  comps.reserve(sys.dims.size());
  for (int d : sys.dims) comps.push_back(QMat::identity(d));
  return LinearMapOfSystems(sys, sys, std::move(comps));
}

/// b after a.
inline LinearMapOfSystems compose_system_maps(const LinearMapOfSystems& b,
                                              const LinearMapOfSystems& a) {
  if (!(a.target == b.source))
    throw theorem_violation("system map composition: middle system mismatch");
  std::vector<QMat> comps(a.comps.size());
  for (size_t x = 0; x < comps.size(); ++x) comps[x] = b.comps[x] * a.comps[x];
  return LinearMapOfSystems(a.source, b.target, std::move(comps));
}

/// f^* theta.
inline LinearMapOfSystems whisker_pullback(const GroupoidMap& f, const LinearMapOfSystems& t) {
  std::vector<QMat> comps(f.source->num_objects());
  for (int x = 0; x < f.source->num_objects(); ++x) comps[x] = t.comps[f.obj_map[x]];
  return LinearMapOfSystems(pullback_system(f, t.source), pullback_system(f, t.target),
                            std::move(comps));
}

// Representation-theoretic constructors used by the character layer.

/// System on BG from a matrix representation (images per group element).
inline LocalSystem system_from_representation(const Gptr& bg, const std::vector<QMat>& images) {
  int d = images.empty() ? 0 : images[0].rows();
  return LocalSystem(bg, {d}, images);
}

/// Permutation representation of G acting on 0..n-1.
inline std::vector<QMat> permutation_images(const FiniteGroup& g, int npoints,
                                            const std::function<int(int, int)>& act) {
  std::vector<QMat> images(g.order, QMat(npoints, npoints));
  for (int e = 0; e < g.order; ++e)
    for (int s = 0; s < npoints; ++s) images[e](act(e, s), s) = 1;
  return images;
}

inline std::vector<QMat> regular_images(const FiniteGroup& g) {
  return permutation_images(g, g.order, [&g](int e, int s) { return g.mul[e][s]; });
}

}  // namespace grpd
