#include "grpd/group.hpp"

#include <gtest/gtest.h>

using namespace grpd;

TEST(Group, FromPermutations) {
  // single transposition on 2 points: C_2
  FiniteGroup c2 = group_from_permutations({{1, 0}});
  c2.validate();
  EXPECT_EQ(c2.order, 2);

  // transposition + 3-cycle: closure must be all of S_3
  FiniteGroup s3 = group_from_permutations({{1, 0, 2}, {1, 2, 0}});
  s3.validate();
  EXPECT_EQ(s3.order, 6);

  // empty generator list: trivial group
  FiniteGroup triv = trivial_group();
  triv.validate();
  EXPECT_EQ(triv.order, 1);

  EXPECT_THROW(group_from_permutations({{0, 0}}), parse_error);
  EXPECT_THROW(group_from_permutations({{1, 0}, {0, 1, 2}}), parse_error);
}

TEST(Group, StandardConstructions) {
  EXPECT_EQ(cyclic_group(5).order, 5);
  EXPECT_EQ(symmetric_group(4).order, 24);
  EXPECT_EQ(alternating_group(4).order, 12);
  EXPECT_EQ(dihedral_group(4).order, 8);
  FiniteGroup q8 = quaternion_group();
  q8.validate();
  EXPECT_EQ(q8.order, 8);
  // Q_8 has a unique element of order 2
  int order2 = 0;
  for (int g = 0; g < 8; ++g)
    if (q8.element_order(g) == 2) ++order2;
  EXPECT_EQ(order2, 1);
  symmetric_group(4).validate();
  alternating_group(4).validate();
  dihedral_group(4).validate();
}

TEST(Group, ElementOrders) {
  FiniteGroup s3 = symmetric_group(3);
  std::vector<int> counts(7, 0);
  for (int g = 0; g < 6; ++g) ++counts[s3.element_order(g)];
  EXPECT_EQ(counts[1], 1);
  EXPECT_EQ(counts[2], 3);
  EXPECT_EQ(counts[3], 2);
}

TEST(Group, DirectProduct) {
  FiniteGroup v4 = direct_product(cyclic_group(2), cyclic_group(2));
  v4.validate();
  EXPECT_EQ(v4.order, 4);
  for (int g = 0; g < 4; ++g) EXPECT_LE(v4.element_order(g), 2);
}

TEST(Group, Isomorphism) {
  EXPECT_TRUE(groups_isomorphic(symmetric_group(3), dihedral_group(3)));
  EXPECT_FALSE(groups_isomorphic(cyclic_group(4), direct_product(cyclic_group(2), cyclic_group(2))));
  EXPECT_FALSE(groups_isomorphic(cyclic_group(6), symmetric_group(3)));
  EXPECT_FALSE(groups_isomorphic(quaternion_group(), dihedral_group(4)));
  EXPECT_TRUE(groups_isomorphic(direct_product(cyclic_group(2), cyclic_group(3)), cyclic_group(6)));
  EXPECT_THROW(groups_isomorphic(cyclic_group(130), cyclic_group(130)), capacity_error);
}

TEST(Group, Subgroups) {
  auto subs_s3 = all_subgroups(symmetric_group(3));
  EXPECT_EQ(subs_s3.size(), 6u);  // 1, three C_2, A_3, S_3
  auto subs_s4 = all_subgroups(symmetric_group(4));
  EXPECT_EQ(subs_s4.size(), 30u);
  auto subs_q8 = all_subgroups(quaternion_group());
  EXPECT_EQ(subs_q8.size(), 6u);
  auto subs_a4 = all_subgroups(alternating_group(4));
  EXPECT_EQ(subs_a4.size(), 10u);
  auto subs_d4 = all_subgroups(dihedral_group(4));
  EXPECT_EQ(subs_d4.size(), 10u);
}

TEST(Group, PPower) {
  EXPECT_TRUE(is_p_power(1, 2));
  EXPECT_TRUE(is_p_power(8, 2));
  EXPECT_FALSE(is_p_power(6, 2));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(13));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(9));
}
