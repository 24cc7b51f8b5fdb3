#pragma once

#include "grpd/groupoid.hpp"

#include <utility>
#include <vector>

namespace grpd {

/// Functor between finite groupoids. Validated on construction: preserves
/// endpoints, identities and composition.
struct GroupoidMap {
  Gptr source;
  Gptr target;
  std::vector<int> obj_map;
  std::vector<int> mor_map;

  GroupoidMap() = default;
  GroupoidMap(Gptr src, Gptr tgt, std::vector<int> omap, std::vector<int> mmap)
      : source(std::move(src)),
        target(std::move(tgt)),
        obj_map(std::move(omap)),
        mor_map(std::move(mmap)) {
    validate();
  }

  int on_object(int x) const { return obj_map[x]; }
  int on_morphism(int m) const { return mor_map[m]; }

  /// For functors that are correct by construction (pullback projections,
  /// composites of validated functors): full validation is quadratic in
  /// hom-set sizes and dominates on iterated pullbacks.
  static GroupoidMap trusted(Gptr src, Gptr tgt, std::vector<int> omap, std::vector<int> mmap) {
    GroupoidMap f;
    f.source = std::move(src);
    f.target = std::move(tgt);
    f.obj_map = std::move(omap);
    f.mor_map = std::move(mmap);
    return f;
  }

  void validate() const {
    if (static_cast<int>(obj_map.size()) != source->num_objects() ||
        static_cast<int>(mor_map.size()) != source->num_morphisms())
      throw parse_error("map: table size mismatch");
    for (int x : obj_map)
      if (x < 0 || x >= target->num_objects()) throw parse_error("map: object image out of range");
    for (int m : mor_map)
      if (m < 0 || m >= target->num_morphisms())
        throw parse_error("map: morphism image out of range");
    for (int m = 0; m < source->num_morphisms(); ++m)
      if (target->src(mor_map[m]) != obj_map[source->src(m)] ||
          target->tgt(mor_map[m]) != obj_map[source->tgt(m)])
        throw parse_error("map: does not preserve endpoints");
    for (int x = 0; x < source->num_objects(); ++x)
      if (mor_map[source->identity_at(x)] != target->identity_at(obj_map[x]))
        throw parse_error("map: does not preserve identities");
    for (int f = 0; f < source->num_morphisms(); ++f)
      for (int g : source->out_of(source->tgt(f)))
        if (mor_map[source->compose(g, f)] != target->compose(mor_map[g], mor_map[f]))
          throw parse_error("map: does not preserve composition");
  }
};

inline GroupoidMap identity_map(const Gptr& x) {
  std::vector<int> omap(x->num_objects()), mmap(x->num_morphisms());
  for (int i = 0; i < x->num_objects(); ++i) omap[i] = i;
  for (int i = 0; i < x->num_morphisms(); ++i) mmap[i] = i;
  return GroupoidMap::trusted(x, x, std::move(omap), std::move(mmap));
}

inline GroupoidMap compose_maps(const GroupoidMap& g, const GroupoidMap& f) {
  if (!same_groupoid(f.target, g.source))
    throw parse_error("map composition: middle groupoid mismatch");
  std::vector<int> omap(f.obj_map.size()), mmap(f.mor_map.size());
  for (size_t i = 0; i < omap.size(); ++i) omap[i] = g.obj_map[f.obj_map[i]];
  for (size_t i = 0; i < mmap.size(); ++i) mmap[i] = g.mor_map[f.mor_map[i]];
  return GroupoidMap::trusted(f.source, g.target, std::move(omap), std::move(mmap));
}

/// The map collapsing everything to object 0 of the target.
inline GroupoidMap constant_map(const Gptr& x, const Gptr& target) {
  std::vector<int> omap(x->num_objects(), 0), mmap(x->num_morphisms(), target->identity_at(0));
  return GroupoidMap(x, target, std::move(omap), std::move(mmap));
}

/// Inclusion of the point groupoid at object y of x.
inline GroupoidMap point_inclusion(const Gptr& pt, const Gptr& x, int y) {
  if (y < 0 || y >= x->num_objects()) throw parse_error("point inclusion: object out of range");
  return GroupoidMap(pt, x, {y}, {x->identity_at(y)});
}

/// Delooping of an injective group homomorphism given by element images.
inline GroupoidMap delooping_map(const Gptr& bh, const Gptr& bg, const std::vector<int>& images) {
  return GroupoidMap(bh, bg, {0}, images);
}

inline bool is_injective_on_morphisms(const GroupoidMap& f) {
  std::vector<bool> hit(f.target->num_morphisms(), false);
  for (int m : f.mor_map) {
    if (hit[m]) return false;
    hit[m] = true;
  }
  return true;
}

/// Essentially surjective and fully faithful.
inline bool is_equivalence(const GroupoidMap& f) {
  const auto& x = *f.source;
  const auto& y = *f.target;
  std::vector<bool> hit(y.num_objects(), false);
  for (int o : f.obj_map) hit[o] = true;
  for (int o = 0; o < y.num_objects(); ++o) {
    if (hit[o]) continue;
    bool connected = false;
    for (int m : y.out_of(o))
      if (hit[y.tgt(m)]) {
        connected = true;
        break;
      }
    if (!connected) return false;
  }
  for (int a = 0; a < x.num_objects(); ++a)
    for (int b = 0; b < x.num_objects(); ++b) {
      auto dom = x.hom(a, b);
      auto cod = y.hom(f.obj_map[a], f.obj_map[b]);
      if (dom.size() != cod.size()) return false;
      std::vector<bool> seen(y.num_morphisms(), false);
      for (int m : dom) {
        if (seen[f.mor_map[m]]) return false;
        seen[f.mor_map[m]] = true;
      }
    }
  return true;
}

}  // namespace grpd
