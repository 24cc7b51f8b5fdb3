#include "grpd/loops.hpp"
#include "grpd/pullback.hpp"

#include <gtest/gtest.h>

using namespace grpd;

TEST(Loops, FreeLoopOfDiscrete) {
  LoopGroupoid l = free_loop(discrete_groupoid(4));
  EXPECT_EQ(l.grpd->num_objects(), 4);
  EXPECT_TRUE(equivalence_check(l.grpd, discrete_groupoid(4)));
}

TEST(Loops, FreeLoopOfDeloopingIsConjugationAction) {
  FiniteGroup s3 = symmetric_group(3);
  LoopGroupoid l = free_loop(delooping(s3));
  EXPECT_TRUE(equivalence_check(l.grpd, conjugation_groupoid(s3)));
  EXPECT_EQ(cardinality(l.grpd), Rational(1));
  l.base_projection.validate();
}

TEST(Loops, FreeLoopCardinalityCountsComponents) {
  std::vector<Gptr> suite = {
      discrete_groupoid(3),
      delooping(symmetric_group(3)),
      disjoint_union({delooping(cyclic_group(2)), discrete_groupoid(2)}),
      product(delooping(cyclic_group(2)), delooping(cyclic_group(3))),
      conjugation_groupoid(dihedral_group(4)),
  };
  for (const auto& x : suite)
    EXPECT_EQ(cardinality(free_loop(x).grpd),
              Rational(skeletize(x).num_components()));
}

TEST(Loops, PFreeLoop) {
  // no nontrivial 2-power elements in C_3
  Gptr bc3 = delooping(cyclic_group(3));
  LoopGroupoid l = p_free_loop(bc3, 2);
  EXPECT_TRUE(equivalence_check(l.grpd, bc3));

  // both elements of C_2 are 2-power order; conjugation is trivial
  LoopGroupoid l2 = p_free_loop(delooping(cyclic_group(2)), 2);
  EXPECT_EQ(l2.grpd->num_objects(), 2);
  Skeleton sk = skeletize(l2.grpd);
  ASSERT_EQ(sk.num_components(), 2);
  for (const auto& c : sk.components) EXPECT_EQ(c.aut.order, 2);
  EXPECT_EQ(cardinality(l2.grpd), Rational(1));

  // S_3 at p=2: classes e and transpositions; 1/6 + 1/2
  LoopGroupoid l3 = p_free_loop(delooping(symmetric_group(3)), 2);
  EXPECT_EQ(cardinality(l3.grpd), Rational(2, 3));

  EXPECT_THROW(p_free_loop(bc3, 4), parse_error);
}

TEST(Loops, IteratedPFreeLoop) {
  Gptr bs3 = delooping(symmetric_group(3));
  EXPECT_EQ(iterated_p_free_loop(bs3, {2, 0}).get(), bs3.get());
  // commuting pairs of 2-power-order elements of S_3: 1 + 3 + 3 + 3 = 10
  EXPECT_EQ(cardinality(iterated_p_free_loop(bs3, {2, 2})), Rational(5, 3));
  // Hom(Z_p^n, C_p) has p^n elements, trivial conjugation, Aut = C_p
  for (long p : {2L, 3L})
    for (int n = 1; n <= 3; ++n) {
      Rational expected = Rational(Integer(1));
      for (int i = 0; i < n - 1; ++i) expected *= p;
      EXPECT_EQ(cardinality(iterated_p_free_loop(delooping(cyclic_group(static_cast<int>(p))),
                                                 {p, n})),
                expected);
    }
}

TEST(Loops, CommutingTuplesDirect) {
  EXPECT_EQ(commuting_tuples_direct(cyclic_group(2), {2, 1})->num_objects(), 2);
  Gptr pairs = commuting_tuples_direct(symmetric_group(3), {2, 2});
  EXPECT_EQ(pairs->num_objects(), 10);
  EXPECT_EQ(cardinality(pairs), Rational(5, 3));
  Gptr c3 = commuting_tuples_direct(cyclic_group(3), {3, 2});
  EXPECT_EQ(c3->num_objects(), 9);
  EXPECT_EQ(cardinality(c3), Rational(3));
  EXPECT_EQ(cardinality(commuting_tuples_direct(trivial_group(), {5, 3})), Rational(1));
}

TEST(Loops, IteratedMatchesDirectOracle) {
  std::vector<FiniteGroup> groups = {cyclic_group(2),  cyclic_group(6), symmetric_group(3),
                                     dihedral_group(4), quaternion_group(),
                                     alternating_group(4), symmetric_group(4)};
  for (const auto& g : groups)
    for (long p : {2L, 3L})
      for (int h = 0; h <= 3; ++h) {
        if (g.order > 12 && h > 2) continue;  // keep runtime modest
        PAdicLoopParams params{p, h};
        EXPECT_TRUE(equivalence_check(iterated_p_free_loop(delooping(g), params),
                                      commuting_tuples_direct(g, params)))
            << "order " << g.order << " p " << p << " h " << h;
      }
}

TEST(Loops, LoopMap) {
  FiniteGroup s3 = symmetric_group(3);
  Gptr bs3 = delooping(s3);
  Gptr bc2 = delooping(cyclic_group(2));
  int tr = -1;
  for (int g = 0; g < 6; ++g)
    if (s3.element_order(g) == 2) {
      tr = g;
      break;
    }
  GroupoidMap incl = delooping_map(bc2, bs3, {s3.identity, tr});

  // identity lifts to identity
  GroupoidMap lid = loop_map(identity_map(bs3), {2, 1});
  for (size_t i = 0; i < lid.obj_map.size(); ++i) EXPECT_EQ(lid.obj_map[i], static_cast<int>(i));

  // induced map at p=2, h=1 has discrete homotopy fibers
  GroupoidMap lf = loop_map(incl, {2, 1});
  lf.validate();
  for (int y = 0; y < lf.target->num_objects(); ++y) {
    Skeleton sk = skeletize(homotopy_fiber(lf, y).grpd);
    for (const auto& c : sk.components) EXPECT_EQ(c.aut.order, 1);
  }

  // functoriality on a composable pair: C_2 <= K <= S_4 for a subgroup
  // chain found by brute force
  FiniteGroup s4 = symmetric_group(4);
  Gptr bs4 = delooping(s4);
  auto subs = all_subgroups(s4);
  std::vector<int> small, mid;
  for (const auto& s : subs)
    if (s.size() == 2 && small.empty()) small = s;
  for (const auto& s : subs)
    if (s.size() == 8 && std::includes(s.begin(), s.end(), small.begin(), small.end()) &&
        mid.empty())
      mid = s;
  ASSERT_FALSE(mid.empty());
  SubgroupEmbedding h = subgroup_as_group(s4, small);
  SubgroupEmbedding k = subgroup_as_group(s4, mid);
  std::vector<int> pos_in_k(s4.order, -1);
  for (size_t i = 0; i < k.images.size(); ++i) pos_in_k[k.images[i]] = static_cast<int>(i);
  std::vector<int> h_in_k(h.sub.order);
  for (int i = 0; i < h.sub.order; ++i) h_in_k[i] = pos_in_k[h.images[i]];
  Gptr bh = delooping(h.sub), bk = delooping(k.sub);
  GroupoidMap f1 = delooping_map(bh, bk, h_in_k);
  GroupoidMap f2 = delooping_map(bk, bs4, k.images);
  GroupoidMap both = compose_maps(f2, f1);
  PAdicLoopParams params{2, 2};
  GroupoidMap lhs = loop_map(both, params);
  GroupoidMap rhs = compose_maps(loop_map(f2, params), loop_map(f1, params));
  EXPECT_EQ(lhs.obj_map, rhs.obj_map);
  EXPECT_EQ(lhs.mor_map, rhs.mor_map);
}

TEST(Loops, PFreeLoopCommutesWithUnionAndProduct) {
  Gptr a = delooping(symmetric_group(3));
  Gptr b = delooping(cyclic_group(4));
  EXPECT_TRUE(equivalence_check(
      p_free_loop(disjoint_union({a, b}), 2).grpd,
      disjoint_union({p_free_loop(a, 2).grpd, p_free_loop(b, 2).grpd})));
  EXPECT_TRUE(equivalence_check(p_free_loop(product(a, b), 2).grpd,
                                product(p_free_loop(a, 2).grpd, p_free_loop(b, 2).grpd)));
}

TEST(Loops, LoopMapPreservesPullbackSquares) {
  // pullback-preservation: L(ho-pullback) compared against ho-pullback of L
  FiniteGroup s3 = symmetric_group(3);
  Gptr bs3 = delooping(s3);
  Gptr bc2 = delooping(cyclic_group(2));
  Gptr bc3 = delooping(cyclic_group(3));
  int tr = -1, cyc = -1;
  for (int g = 0; g < 6; ++g) {
    if (s3.element_order(g) == 2 && tr < 0) tr = g;
    if (s3.element_order(g) == 3 && cyc < 0) cyc = g;
  }
  GroupoidMap f = delooping_map(bc2, bs3, {s3.identity, tr});
  GroupoidMap g = delooping_map(bc3, bs3, {s3.identity, cyc, s3.mul[cyc][cyc]});
  PAdicLoopParams params{2, 1};
  Pullback pb = homotopy_pullback(f, g);
  GroupoidMap lf = loop_map(f, params), lg = loop_map(g, params);
  Pullback lpb = homotopy_pullback(lf, lg);
  EXPECT_TRUE(equivalence_check(iterated_p_free_loop(pb.total, params), lpb.total));
}
