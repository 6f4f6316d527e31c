#include "ternary/oracle.hpp"

#include <gtest/gtest.h>

using namespace ternary;

TEST(BruteForceNormal, Examples) {
  EXPECT_EQ(brute_force_normal(3, 13, 5), (Solution{1, 1, 4}));
  EXPECT_EQ(brute_force_normal(1, 7, 5), (Solution{1, 0, 1}));
  EXPECT_EQ(brute_force_normal(5, 1, 5), (Solution{0, 1, 1}));
  EXPECT_EQ(brute_force_normal(2, 3, 1000), std::nullopt);
  EXPECT_THROW(brute_force_normal(3, 13, 0), InvalidArgument);
}

TEST(BruteForceNormal, LexicographicFirstHit) {
  // 2*1 + 7*1 = 9 is hit before any larger x
  EXPECT_EQ(brute_force_normal(2, 7, 10), (Solution{1, 1, 3}));
  EXPECT_EQ(brute_force_normal(17, 13, 100), (Solution{1, 4, 15}));
}

TEST(BruteForceNormal, FastAndSlowPathsAgree) {
  // coefficients large enough that the fast path is refused
  Integer big("1000000000000000003");
  auto hit = brute_force_normal(big, 1, 3);
  EXPECT_EQ(hit, (Solution{0, 1, 1}));
  EXPECT_EQ(brute_force_normal(Integer("1000000000000000002"), 2, 3), std::nullopt);
}

TEST(BruteForceGeneral, Examples) {
  EXPECT_EQ(brute_force_general(1, 1, -2, 2), (Solution{1, 1, 1}));
  EXPECT_EQ(brute_force_general(1, 1, -3, 1000), std::nullopt);
  EXPECT_EQ(brute_force_general(3, 5, -2, 3), (Solution{1, 1, 2}));
  EXPECT_EQ(brute_force_general(1, 1, 1, 10), std::nullopt);
  EXPECT_EQ(brute_force_general(-1, 1, 5, 10), (Solution{1, 1, 0}));
}

TEST(ResidueTable, Examples) {
  EXPECT_EQ(residue_table(1), std::vector<Integer>{0});
  EXPECT_EQ(residue_table(3), (std::vector<Integer>{0, 1}));
  EXPECT_EQ(residue_table(13), (std::vector<Integer>{0, 1, 3, 4, 9, 10, 12}));
  EXPECT_EQ(residue_table(8), (std::vector<Integer>{0, 1, 4}));
  EXPECT_THROW(residue_table(0), InvalidArgument);
}
