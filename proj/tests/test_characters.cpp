#include "grpd/rep.hpp"

#include <gtest/gtest.h>

using namespace grpd;

namespace {

RationalRep sign_rep_c2() {
  FiniteGroup c2 = cyclic_group(2);
  return RationalRep(c2, {QMat::identity(1), QMat::identity(1) * Rational(-1)});
}

GroupoidMap subgroup_map(const FiniteGroup& g, const std::vector<int>& elems,
                         FiniteGroup* sub_out = nullptr) {
  SubgroupEmbedding emb = subgroup_as_group(g, elems);
  if (sub_out) *sub_out = emb.sub;
  return delooping_map(delooping(emb.sub), delooping(g), emb.images);
}

// Class values keyed by the order of the class representative, for groups
// where element order separates the relevant classes.
std::vector<std::pair<int, Rational>> by_rep_order(const FiniteGroup& g, const ClassFunction& chi) {
  LoopGroupoid lg = free_loop(delooping(g));
  Skeleton sk = skeletize(lg.grpd);
  std::vector<std::pair<int, Rational>> out;
  for (int c = 0; c < sk.num_components(); ++c)
    out.emplace_back(g.element_order(lg.object_label[sk.components[c].rep].second),
                     chi.values[c]);
  return out;
}

}  // namespace

TEST(Rep, ValidationRejectsNonHomomorphism) {
  FiniteGroup c2 = cyclic_group(2);
  EXPECT_THROW(RationalRep(c2, {QMat::identity(1), QMat::identity(1) * Rational(2)}),
               parse_error);
}

TEST(Character, TrivialRepIsConstantOne) {
  for (auto g : {cyclic_group(4), symmetric_group(3), quaternion_group()}) {
    ClassFunction chi = character(trivial_rep(g));
    for (const auto& v : chi.values) EXPECT_EQ(v, Rational(1));
  }
}

TEST(Character, RegularRepIsOrderAtIdentity) {
  for (auto g : {cyclic_group(3), symmetric_group(3), dihedral_group(4)}) {
    ClassFunction chi = character(regular_rep(g));
    LoopGroupoid lg = free_loop(delooping(g));
    Skeleton sk = skeletize(lg.grpd);
    for (int c = 0; c < sk.num_components(); ++c) {
      int loop = lg.object_label[sk.components[c].rep].second;
      EXPECT_EQ(chi.values[c], loop == g.identity ? Rational(g.order) : Rational(0));
    }
  }
}

TEST(Character, PermutationRepCountsFixedPoints) {
  FiniteGroup s3 = symmetric_group(3);
  // Natural action of S_3 on 3 points, recovered from the coset action on
  // S_3 / <transposition>.
  int t = -1;
  for (int e = 1; e < s3.order; ++e)
    if (s3.element_order(e) == 2) {
      t = e;
      break;
    }
  RationalRep perm = coset_rep(s3, subgroup_closure(s3, {t}));
  ASSERT_EQ(perm.dim, 3);
  auto vals = by_rep_order(s3, character(perm));
  for (const auto& [order, v] : vals) {
    if (order == 1) EXPECT_EQ(v, Rational(3));
    if (order == 2) EXPECT_EQ(v, Rational(1));
    if (order == 3) EXPECT_EQ(v, Rational(0));
  }
}

TEST(Character, AdditiveAndMultiplicative) {
  FiniteGroup d4 = dihedral_group(4);
  RationalRep a = regular_rep(d4);
  RationalRep b = coset_rep(d4, subgroup_closure(d4, {1}));
  ClassFunction ca = character(a), cb = character(b);
  ClassFunction sum = character(rep_direct_sum(a, b));
  ClassFunction prod = character(rep_tensor(a, b));
  for (size_t c = 0; c < ca.values.size(); ++c) {
    EXPECT_EQ(sum.values[c], ca.values[c] + cb.values[c]);
    EXPECT_EQ(prod.values[c], ca.values[c] * cb.values[c]);
  }
}

TEST(Induce, TrivialRepGivesCosetPermutationRep) {
  FiniteGroup s3 = symmetric_group(3);
  for (int e = 1; e < s3.order; ++e) {
    std::vector<int> elems = subgroup_closure(s3, {e});
    FiniteGroup h;
    GroupoidMap inc = subgroup_map(s3, elems, &h);
    RationalRep ind = induce(inc, trivial_rep(h));
    EXPECT_EQ(ind.dim, s3.order / static_cast<int>(elems.size()));
    EXPECT_EQ(character(ind).values, character(coset_rep(s3, elems)).values);
  }
}

TEST(Induce, RegularRepGivesRegularRep) {
  FiniteGroup s3 = symmetric_group(3);
  int r = -1;
  for (int e = 1; e < s3.order; ++e)
    if (s3.element_order(e) == 3) {
      r = e;
      break;
    }
  FiniteGroup h;
  GroupoidMap inc = subgroup_map(s3, subgroup_closure(s3, {r}), &h);
  RationalRep ind = induce(inc, regular_rep(h));
  EXPECT_EQ(character(ind).values, character(regular_rep(s3)).values);
}

TEST(Induce, SignOfC2InS3) {
  FiniteGroup s3 = symmetric_group(3);
  int t = -1;
  for (int e = 1; e < s3.order; ++e)
    if (s3.element_order(e) == 2) {
      t = e;
      break;
    }
  FiniteGroup h;
  GroupoidMap inc = subgroup_map(s3, subgroup_closure(s3, {t}), &h);
  RationalRep sign(h, {QMat::identity(1), QMat::identity(1) * Rational(-1)});
  RationalRep ind = induce(inc, sign);
  EXPECT_EQ(ind.dim, 3);
  for (const auto& [order, v] : by_rep_order(s3, character(ind))) {
    if (order == 1) EXPECT_EQ(v, Rational(3));
    if (order == 2) EXPECT_EQ(v, Rational(-1));
    if (order == 3) EXPECT_EQ(v, Rational(0));
  }
  // Rejects non-injective maps.
  GroupoidMap collapse = constant_map(delooping(h), delooping(s3));
  EXPECT_THROW(induce(collapse, sign), parse_error);
}

TEST(Induce, TransitiveInTwoSteps) {
  FiniteGroup d4 = dihedral_group(4);
  // rotations form C_4; the square rotation generates C_2 inside it.
  std::vector<int> c4_elems, c2_elems;
  for (int e = 0; e < d4.order; ++e) {
    if (d4.element_order(e) == 4) {
      c4_elems = subgroup_closure(d4, {e});
      c2_elems = subgroup_closure(d4, {d4.mul[e][e]});
      break;
    }
  }
  FiniteGroup c4, c2;
  GroupoidMap k_in_g = subgroup_map(d4, c4_elems, &c4);
  SubgroupEmbedding inner = subgroup_as_group(d4, c2_elems);
  // express C_2 inside C_4: find each image inside the C_4 element list
  std::vector<int> images;
  for (int im : inner.images) {
    for (size_t i = 0; i < c4_elems.size(); ++i)
      if (c4_elems[i] == im) images.push_back(static_cast<int>(i));
  }
  c2 = inner.sub;
  GroupoidMap h_in_k = delooping_map(delooping(c2), delooping(c4), images);
  RationalRep rho = regular_rep(c2);
  RationalRep two_step = induce(k_in_g, induce(h_in_k, rho));
  RationalRep one_step = induce(subgroup_map(d4, c2_elems), rho);
  EXPECT_EQ(character(two_step).values, character(one_step).values);
}

TEST(InducedCharacter, IntegrationMatchesBlockConstruction) {
  FiniteGroup s3 = symmetric_group(3);
  for (int e = 1; e < s3.order; ++e) {
    FiniteGroup h;
    GroupoidMap inc = subgroup_map(s3, subgroup_closure(s3, {e}), &h);
    for (const RationalRep& rho : {trivial_rep(h), regular_rep(h)}) {
      SquareReport rep = verify_induction_square(inc, rho);
      EXPECT_TRUE(rep.ok);
    }
  }
}

TEST(InducedCharacter, SignOfC2ViaIntegration) {
  FiniteGroup s3 = symmetric_group(3);
  int t = -1;
  for (int e = 1; e < s3.order; ++e)
    if (s3.element_order(e) == 2) {
      t = e;
      break;
    }
  FiniteGroup h;
  GroupoidMap inc = subgroup_map(s3, subgroup_closure(s3, {t}), &h);
  ClassFunction chi{free_loop(delooping(h)).grpd, {Rational(1), Rational(-1)}};
  auto vals = by_rep_order(s3, induced_character_via_integration(inc, chi));
  for (const auto& [order, v] : vals) {
    if (order == 1) EXPECT_EQ(v, Rational(3));
    if (order == 2) EXPECT_EQ(v, Rational(-1));
    if (order == 3) EXPECT_EQ(v, Rational(0));
  }
}

TEST(InducedCharacter, PTypicalSquares) {
  FiniteGroup s3 = symmetric_group(3);
  for (int e = 1; e < s3.order; ++e) {
    FiniteGroup h;
    GroupoidMap inc = subgroup_map(s3, subgroup_closure(s3, {e}), &h);
    for (long p : {2L, 3L, 5L}) {
      EXPECT_TRUE(p_typical_character_square(inc, trivial_rep(h), p).ok);
      EXPECT_TRUE(p_typical_character_square(inc, regular_rep(h), p).ok);
    }
  }
  // the C_2 <= S_3 sign example at p = 2
  int t = -1;
  for (int e = 1; e < s3.order; ++e)
    if (s3.element_order(e) == 2) {
      t = e;
      break;
    }
  FiniteGroup h;
  GroupoidMap inc = subgroup_map(s3, subgroup_closure(s3, {t}), &h);
  RationalRep sign(h, {QMat::identity(1), QMat::identity(1) * Rational(-1)});
  SquareReport rep = p_typical_character_square(inc, sign, 2);
  EXPECT_TRUE(rep.ok);
  EXPECT_EQ(rep.via_representations.size(), 2u);  // classes e and transpositions
}

TEST(Chromatic, PointIsOneAtAllHeights) {
  for (long p : {2L, 3L, 5L})
    for (int n = 0; n <= 3; ++n) EXPECT_EQ(chromatic_cardinality(point_groupoid(), p, n), Rational(1));
}

TEST(Chromatic, CyclicGroupGolden) {
  for (long p : {2L, 3L, 5L}) {
    Gptr bcp = delooping(cyclic_group(static_cast<int>(p)));
    for (int n = 1; n <= 3; ++n) {
      Rational expect = 1;
      for (int i = 1; i < n; ++i) expect *= Rational(p);
      EXPECT_EQ(chromatic_cardinality(bcp, p, n), expect);
    }
  }
}

TEST(Chromatic, SymmetricGroupGoldens) {
  Gptr bs3 = delooping(symmetric_group(3));
  EXPECT_EQ(chromatic_cardinality(bs3, 2, 1), Rational(2, 3));
  EXPECT_EQ(chromatic_cardinality(bs3, 2, 2), Rational(5, 3));
}

TEST(Chromatic, HeightZeroIsCardinality) {
  for (auto g : {cyclic_group(6), symmetric_group(3), quaternion_group()}) {
    Gptr bg = delooping(g);
    for (long p : {2L, 3L}) EXPECT_EQ(chromatic_cardinality(bg, p, 0), cardinality(bg));
  }
}

TEST(Chromatic, MatchesOracle) {
  std::vector<FiniteGroup> groups = {cyclic_group(2), cyclic_group(3), symmetric_group(3),
                                     dihedral_group(4), quaternion_group()};
  for (const auto& g : groups) {
    Gptr bg = delooping(g);
    for (long p : {2L, 3L, 5L})
      for (int n = 0; n <= 2; ++n)
        EXPECT_EQ(chromatic_cardinality(bg, p, n), chromatic_cardinality_oracle(g, p, n))
            << "order " << g.order << " p " << p << " n " << n;
  }
}

TEST(Chromatic, OracleGoldens) {
  EXPECT_EQ(chromatic_cardinality_oracle(cyclic_group(3), 3, 2), Rational(3));
  EXPECT_EQ(chromatic_cardinality_oracle(symmetric_group(3), 2, 2), Rational(5, 3));
  EXPECT_EQ(chromatic_cardinality_oracle(trivial_group(), 2, 3), Rational(1));
}
