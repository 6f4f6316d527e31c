#include "ternary/legendre.hpp"

#include <gtest/gtest.h>

#include "ternary/arith.hpp"
#include "ternary/oracle.hpp"

using namespace ternary;

namespace {

HypothesisError expect_hypothesis(const GeneralEquation& eq) {
  try {
    validate_input(eq);
  } catch (const HypothesisError& e) {
    return e;
  }
  ADD_FAILURE() << "no hypothesis error";
  return HypothesisError(HypothesisKind::ZeroCoefficient, {}, "");
}

std::vector<long long> squarefree_signed(long long bound) {
  std::vector<long long> out;
  for (long long v = -bound; v <= bound; ++v) {
    if (v != 0 && is_squarefree(v)) out.push_back(v);
  }
  return out;
}

bool valid(const GeneralEquation& eq) {
  try {
    validate_input(eq);
    return true;
  } catch (const HypothesisError&) {
    return false;
  }
}

}  // namespace

TEST(ValidateInput, Accepts) { EXPECT_EQ(validate_input({1, 1, -2}), (GeneralEquation{1, 1, -2})); }

TEST(ValidateInput, DistinctErrors) {
  auto e = expect_hypothesis({4, 3, -1});
  EXPECT_EQ(e.kind(), HypothesisKind::NotSquareFree);
  EXPECT_EQ(e.slots(), std::vector<int>{0});
  EXPECT_STREQ(e.what(), "a is not square-free");

  e = expect_hypothesis({6, 10, -1});
  EXPECT_EQ(e.kind(), HypothesisKind::NotCoprime);
  EXPECT_EQ(e.slots(), (std::vector<int>{0, 1}));

  EXPECT_EQ(expect_hypothesis({0, 1, -1}).kind(), HypothesisKind::ZeroCoefficient);
  EXPECT_EQ(expect_hypothesis({1, 2, 3}).kind(), HypothesisKind::AllSameSign);
  EXPECT_EQ(expect_hypothesis({-1, -2, -3}).kind(), HypothesisKind::AllSameSign);

  try {
    validate_input(GeneralEquation{1, 1, Integer("-10000000000019")});
    FAIL();
  } catch (const HypothesisError& err) {
    EXPECT_EQ(err.kind(), HypothesisKind::TooLarge);
    EXPECT_EQ(err.slots(), std::vector<int>{2});
  }
  EXPECT_NO_THROW(validate_input(GeneralEquation{1, 1, -7}, 7));
  EXPECT_THROW(validate_input(GeneralEquation{1, 1, -7}, 6), HypothesisError);
}

TEST(ValidateInput, NormalForm) {
  EXPECT_NO_THROW(validate_input(NormalEquation{3, 13}));
  EXPECT_THROW(validate_input(NormalEquation{4, 3}), HypothesisError);
  EXPECT_THROW(validate_input(NormalEquation{-3, 2}), HypothesisError);
  EXPECT_THROW(validate_input(NormalEquation{0, 2}), HypothesisError);
}

TEST(Canonicalize, Examples) {
  auto c = canonicalize({1, 1, -2});
  EXPECT_EQ(c.permutation, (std::array<int, 3>{0, 1, 2}));
  EXPECT_FALSE(c.flipped);
  EXPECT_EQ(c.canonical, (GeneralEquation{1, 1, -2}));

  c = canonicalize({-1, -1, 2});
  EXPECT_TRUE(c.flipped);
  EXPECT_EQ(c.canonical, (GeneralEquation{1, 1, -2}));

  c = canonicalize({-2, 1, 1});
  EXPECT_FALSE(c.flipped);
  EXPECT_EQ(c.canonical, (GeneralEquation{1, 1, -2}));
  EXPECT_EQ(c.permutation, (std::array<int, 3>{1, 2, 0}));
  // (x, y, z) = (1, 1, 1) on the canonical form lands in slots (y, z, x)
  EXPECT_EQ(c.restore(Solution{2, 3, 5}), (Solution{5, 2, 3}));
}

TEST(Canonicalize, RoundTripsEveryValidTriple) {
  auto values = squarefree_signed(7);
  for (auto a : values) {
    for (auto b : values) {
      for (auto c : values) {
        GeneralEquation eq{a, b, c};
        if (!valid(eq)) continue;
        auto canon = canonicalize(eq);
        EXPECT_EQ(canon.restore(), eq);
        EXPECT_GT(canon.canonical.a, 0);
        EXPECT_GT(canon.canonical.b, 0);
        EXPECT_LT(canon.canonical.c, 0);
        // a canonical solution maps to a solution of the input
        if (auto hit = brute_force_general(canon.canonical.a, canon.canonical.b,
                                           canon.canonical.c, 30)) {
          EXPECT_TRUE(satisfies(eq, canon.restore(*hit)));
        }
      }
    }
  }
}

TEST(CheckLegendreConditions, Examples) {
  auto c = check_legendre_conditions({1, 1, -1});
  EXPECT_TRUE(c.all_hold());

  c = check_legendre_conditions({3, 5, -2});
  ASSERT_TRUE(c.all_hold());
  EXPECT_EQ(c.neg_ab_mod_c->modulus, 2);
  EXPECT_EQ(c.neg_bc_mod_a->modulus, 3);
  EXPECT_EQ(c.neg_ac_mod_b->modulus, 5);

  c = check_legendre_conditions({1, 1, -3});
  EXPECT_EQ(c.first_failure(), LegCondition::NegABModC);
}

TEST(ToNormal, Examples) {
  EXPECT_EQ(to_normal({1, 1, -2}), (NormalEquation{2, 2}));
  EXPECT_EQ(to_normal({3, 5, -2}), (NormalEquation{6, 10}));
  EXPECT_EQ(to_normal({1, 1, -1}), (NormalEquation{1, 1}));
  EXPECT_THROW(to_normal({1, -1, 2}), InvalidArgument);
}

TEST(FromNormalSolution, Examples) {
  EXPECT_EQ(from_normal_solution({1, 1, -1}, {1, 0, 1}), (Solution{1, 0, 1}));
  EXPECT_EQ(from_normal_solution({1, 1, -2}, {1, 1, 2}), (Solution{1, 1, 1}));
  EXPECT_EQ(from_normal_solution({3, 5, -2}, {1, 1, 4}), (Solution{1, 1, 2}));
  EXPECT_THROW(from_normal_solution({3, 5, -2}, {1, 1, 3}), InvalidArgument);
}

TEST(NormalToGeneral, Examples) {
  EXPECT_EQ(normal_to_general({6, 10}), (GeneralEquation{3, 5, -2}));
  EXPECT_EQ(normal_to_general({3, 13}), (GeneralEquation{3, 13, -1}));
  EXPECT_EQ(normal_to_general({5, 5}), (GeneralEquation{1, 1, -5}));
  EXPECT_EQ(general_to_normal_solution({6, 10}, {1, 1, 2}), (Solution{1, 1, 4}));
}

TEST(SolveGeneral, Examples) {
  auto out = solve_general({1, 1, -2});
  ASSERT_TRUE(std::holds_alternative<GeneralSolved>(out));
  EXPECT_EQ(std::get<GeneralSolved>(out).solution, (Solution{1, 1, 1}));

  out = solve_general({3, 5, -2});
  ASSERT_TRUE(std::holds_alternative<GeneralSolved>(out));
  EXPECT_EQ(std::get<GeneralSolved>(out).solution, (Solution{1, 1, 2}));

  out = solve_general({1, 1, -3});
  ASSERT_TRUE(std::holds_alternative<GeneralUnsolvable>(out));
  const auto& u = std::get<GeneralUnsolvable>(out);
  EXPECT_EQ(u.failed, LegCondition::NegABModC);
  EXPECT_EQ(u.modulus, 3);
  EXPECT_EQ(u.value, -1);
}

TEST(SolveGeneral, PermutedAndFlippedInputs) {
  auto out = solve_general({-2, 1, 1});
  ASSERT_TRUE(std::holds_alternative<GeneralSolved>(out));
  EXPECT_EQ(std::get<GeneralSolved>(out).solution, (Solution{1, 1, 1}));

  out = solve_general({-3, 2, -5});
  ASSERT_TRUE(std::holds_alternative<GeneralSolved>(out));
  EXPECT_TRUE(satisfies(GeneralEquation{-3, 2, -5}, std::get<GeneralSolved>(out).solution));
}

TEST(SolveGeneral, RejectsInvalidInput) {
  EXPECT_THROW(solve_general({4, 3, -1}), HypothesisError);
  EXPECT_THROW(solve_general({1, 1, 1}), HypothesisError);
}

TEST(MakePrimitive, Examples) {
  EXPECT_EQ(make_primitive(NormalEquation{17, 13}, {3, 12, 45}), (Solution{1, 4, 15}));
  EXPECT_EQ(make_primitive(GeneralEquation{1, 1, -2}, {1, 1, 1}), (Solution{1, 1, 1}));
  EXPECT_EQ(make_primitive(GeneralEquation{1, 1, -2}, {2, 2, 2}), (Solution{1, 1, 1}));
  EXPECT_EQ(make_primitive(GeneralEquation{1, 1, -2}, {14, 14, 14}), (Solution{1, 1, 1}));
  EXPECT_THROW(make_primitive(GeneralEquation{1, 1, -2}, {1, 2, 1}), InvalidArgument);
}

TEST(ExtractNecessityWitnesses, NormalExample) {
  auto w = extract_necessity_witnesses(NormalEquation{3, 13}, {1, 1, 4});
  ASSERT_TRUE(w.b_mod_a);
  EXPECT_EQ(w.b_mod_a->root, 1);
  EXPECT_TRUE(w.a_mod_b->verify());
  EXPECT_EQ(w.neg_product_mod_d->root, 0);
}

TEST(ExtractNecessityWitnesses, GeneralExample) {
  auto w = extract_necessity_witnesses(GeneralEquation{3, 5, -2}, {1, 1, 2});
  ASSERT_TRUE(w.neg_bc_mod_a);
  // c*z*y^-1 = -4 == 2 (mod 3); stored as the root <= 3/2
  EXPECT_EQ(w.neg_bc_mod_a->root, 1);
  EXPECT_EQ(w.neg_bc_mod_a->value, 10);
  EXPECT_TRUE(w.neg_bc_mod_a->verify());
  EXPECT_TRUE(w.neg_ab_mod_c->verify());
  EXPECT_TRUE(w.neg_ac_mod_b->verify());
}

TEST(ExtractNecessityWitnesses, RejectsNonPrimitive) {
  // y = 68 shares 17 with a, so z * y^-1 mod 17 does not exist
  EXPECT_THROW(extract_necessity_witnesses(NormalEquation{17, 13}, {17, 68, 255}),
               InvalidArgument);
  EXPECT_THROW(extract_necessity_witnesses(GeneralEquation{3, 5, -2}, {3, 3, 6}),
               InvalidArgument);
}

TEST(SolveGeneral, AgreesWithOracleForSmallCoefficients) {
  auto values = squarefree_signed(10);
  for (auto a : values) {
    for (auto b : values) {
      for (auto c : values) {
        GeneralEquation eq{a, b, c};
        if (!valid(eq)) continue;
        auto out = solve_general(eq);
        auto hit = brute_force_general(a, b, c, 200);
        ASSERT_EQ(std::holds_alternative<GeneralSolved>(out), hit.has_value())
            << a << " " << b << " " << c;
        if (hit) {
          const auto& s = std::get<GeneralSolved>(out);
          EXPECT_TRUE(satisfies(eq, s.solution));
          auto prim = make_primitive(eq, *hit);
          EXPECT_TRUE(extract_necessity_witnesses(eq, prim).all_hold());
        }
      }
    }
  }
}

TEST(Equivalence, NormalAndGeneralSolutionsMapBothWays) {
  for (long long a = 1; a <= 40; ++a) {
    if (!is_squarefree(a)) continue;
    for (long long b = 1; b <= 40; ++b) {
      if (!is_squarefree(b)) continue;
      NormalEquation normal{a, b};
      auto out = solve_normal(normal);
      auto* solved = std::get_if<NormalSolved>(&out);
      if (solved == nullptr) continue;
      GeneralEquation general = normal_to_general(normal);
      ASSERT_TRUE(valid(general));
      auto gen = solve_general(general);
      ASSERT_TRUE(std::holds_alternative<GeneralSolved>(gen)) << a << "," << b;
      Solution mapped = general_to_normal_solution(normal, std::get<GeneralSolved>(gen).solution);
      EXPECT_TRUE(satisfies(normal, mapped));
      // and back: canonical general -> normal -> general
      auto canon = canonicalize(general);
      NormalEquation back = to_normal(canon.canonical);
      auto back_out = std::get<NormalSolved>(solve_normal(back));
      EXPECT_TRUE(satisfies(general,
                            canon.restore(from_normal_solution(canon.canonical, back_out.solution))));
    }
  }
}
