#include "ternary/two_squares.hpp"

#include <gtest/gtest.h>

#include "ternary/arith.hpp"
#include "ternary/residues.hpp"

using namespace ternary;

TEST(SeedMultiple, Examples) {
  auto s = seed_multiple(5, 2);
  EXPECT_EQ(s.k, 1);
  EXPECT_EQ(s.a, 2);
  s = seed_multiple(13, 5);
  EXPECT_EQ(s.k, 2);
  EXPECT_EQ(s.a, 5);
  // 8 == -5 (mod 13) centers to the same a
  EXPECT_EQ(seed_multiple(13, 8).a, 5);
}

TEST(SeedMultiple, Rejections) {
  EXPECT_THROW(seed_multiple(13, 4), InvalidArgument);
  EXPECT_THROW(seed_multiple(2, 1), InvalidArgument);
  EXPECT_THROW(seed_multiple(15, 4), InvalidArgument);
}

TEST(DescendStep, EvenMultipleBothOdd) {
  auto next = descend_step(13, {2, 1, 5});
  EXPECT_EQ(next, (MultipleOfPrime{1, 2, 3}));
}

TEST(DescendStep, OddMultiple) {
  auto seed = seed_multiple(29, 12);
  EXPECT_EQ(seed.k, 5);
  EXPECT_EQ(seed.a, 12);
  auto next = descend_step(29, {5, 12, 1});
  EXPECT_EQ(next, (MultipleOfPrime{1, 5, 2}));
}

TEST(DescendStep, EvenMultipleBothEven) {
  // 4*17 = 68 = 8^2 + 2^2
  auto next = descend_step(17, {4, 8, 2});
  EXPECT_EQ(next, (MultipleOfPrime{1, 4, 1}));
}

TEST(DescendStep, Rejections) {
  EXPECT_THROW(descend_step(5, {1, 1, 2}), InvalidArgument);  // h = 1 is terminal
  EXPECT_THROW(descend_step(13, {2, 1, 4}), InvalidArgument);  // 26 != 17
  EXPECT_THROW(descend_step(5, {5, 5, 0}), InvalidArgument);   // h == p
}

TEST(DescendStep, ShrinksForEveryReachableState) {
  // Walk every multiple-of-p representation h*p = a^2 + b^2 with 1 < h < p for small p.
  for (long long p : {5, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97}) {
    for (long long a = 0; a < p; ++a) {
      for (long long b = 0; b < p; ++b) {
        long long n = a * a + b * b;
        if (n % p != 0) continue;
        long long h = n / p;
        if (h <= 1 || h >= p) continue;
        auto next = descend_step(p, {h, a, b});
        EXPECT_LT(next.multiple, h);
        EXPECT_GE(next.multiple, 1);
        EXPECT_EQ(next.multiple * p, next.a * next.a + next.b * next.b);
      }
    }
  }
}

TEST(PrimeTwoSquares, Examples) {
  EXPECT_EQ(prime_two_squares(2, 1), (TwoSquares{1, 1, 2}));
  EXPECT_EQ(prime_two_squares(5, 2), (TwoSquares{1, 2, 5}));
  EXPECT_EQ(prime_two_squares(13, 5), (TwoSquares{2, 3, 13}));
  EXPECT_EQ(prime_two_squares(29, 12), (TwoSquares{2, 5, 29}));
}

TEST(PrimeTwoSquares, AllPrimesOneModFourBelow2000) {
  for (long long p = 5; p < 2000; p += 4) {
    if (!is_prime(p)) continue;
    auto root = sqrt_mod_prime(-1, p);
    ASSERT_TRUE(root) << p;
    auto ts = prime_two_squares(p, *root);
    EXPECT_TRUE(ts.verify()) << p;
    EXPECT_LE(ts.r, ts.s);
  }
}

TEST(TwoSquaresSquarefree, Examples) {
  EXPECT_EQ(two_squares_squarefree(1, {}), (TwoSquares{0, 1, 1}));
  std::vector<PrimeRoot> roots{{5, 2}, {13, 5}};
  EXPECT_EQ(two_squares_squarefree(65, roots), (TwoSquares{8, 1, 65}));
  EXPECT_EQ(two_squares_squarefree(5, roots), (TwoSquares{1, 2, 5}));
  std::vector<PrimeRoot> with_two{{5, 2}};
  EXPECT_EQ(two_squares_squarefree(10, with_two), (TwoSquares{3, 1, 10}));
}

TEST(TwoSquaresSquarefree, RejectsMissingOrBogusRoots) {
  std::vector<PrimeRoot> roots{{5, 2}};
  try {
    two_squares_squarefree(65, roots);
    FAIL() << "expected a rejection";
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("13"), std::string::npos);
  }
  std::vector<PrimeRoot> bogus{{3, 1}};
  EXPECT_THROW(two_squares_squarefree(3, bogus), InvalidArgument);
  EXPECT_THROW(two_squares_squarefree(20, {}), InvalidArgument);
}

TEST(TwoSquaresSquarefree, FoldRecomposesAndIsLogarithmic) {
  for (long long b = 1; b <= 3000; ++b) {
    if (!is_squarefree(b) || !is_square_mod(-1, b)) continue;
    std::vector<PrimeRoot> roots;
    auto factors = factorize(b);
    for (const auto& f : factors) roots.push_back({f.prime, *sqrt_mod_prime(-1, f.prime)});
    auto ts = two_squares_squarefree(b, roots);
    EXPECT_TRUE(ts.verify()) << b;
    // one fold per prime factor, at most log2(b) of them
    EXPECT_LE(Integer(1) << factors.size(), Integer(b) * 2);
  }
}
