#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "ternary/integer.hpp"
#include "ternary/residues.hpp"
#include "ternary/two_squares.hpp"

namespace ternary {

/// a*x^2 + b*y^2 = z^2 with a, b positive and square-free.
struct NormalEquation {
  Integer a;
  Integer b;

  friend bool operator==(const NormalEquation&, const NormalEquation&) = default;
};

/// Non-negative triple, not all zero.
struct Solution {
  Integer x;
  Integer y;
  Integer z;

  bool is_trivial() const { return x == 0 && y == 0 && z == 0; }

  friend bool operator==(const Solution&, const Solution&) = default;
};

bool satisfies(const NormalEquation& eq, const Solution& s);

enum class NormCondition {
  AResidueModB,    // Norm.1: a R b
  BResidueModA,    // Norm.2: b R a
  NegProductModD,  // Norm.3: -(a/d)(b/d) R d
};

std::string_view condition_name(NormCondition c);

struct NormalConditions {
  Integer d;
  std::optional<ResidueWitness> a_mod_b;
  std::optional<ResidueWitness> b_mod_a;
  std::optional<ResidueWitness> neg_product_mod_d;

  bool all_hold() const { return a_mod_b && b_mod_a && neg_product_mod_d; }
  /// First failing condition in the order Norm.1, Norm.2, Norm.3.
  std::optional<NormCondition> first_failure() const;
  /// The (value, modulus) pair the given condition asks about.
  std::pair<Integer, Integer> subject(NormCondition c, const NormalEquation& eq) const;
};

NormalConditions check_normal_conditions(const NormalEquation& eq);

enum class ReductionSide { ReduceA, ReduceB };

/// One descent step: root^2 - fixed = h^2 * new_coeff * previous_coeff, where
/// previous_coeff is the coefficient being replaced and fixed_coeff the one kept.
struct ReductionStep {
  std::size_t index = 0;
  ReductionSide side = ReductionSide::ReduceA;
  Integer root;
  Integer h;
  Integer k;
  Integer new_coeff;
  Integer previous_coeff;
  Integer fixed_coeff;
  NormalConditions conditions;  // for the reduced equation

  NormalEquation before() const;
  NormalEquation after() const;
};

/// Reduces a (the larger coefficient) against b using beta^2 == b (mod a), beta <= a/2.
/// The returned step has side ReduceA; callers reducing b relabel it.
ReductionStep reduce_once(const Integer& a, const Integer& b, const Integer& beta);

/// (A*x*h, z + y*beta, z*beta + b*y) for a ReduceA step.
Solution lift_beta(const ReductionStep& step, const Solution& inner);

/// (z + x*alpha, B*y*h, z*alpha + a*x) for a ReduceB step.
Solution lift_alpha(const ReductionStep& step, const Solution& inner);

enum class BaseCase { AIsOne, BIsOne, Equal };

std::string_view base_case_name(BaseCase c);

struct BaseSolution {
  BaseCase kind;
  Solution solution;
  std::optional<TwoSquares> two_squares;
};

/// Terminal equations: a == 1, b == 1 or a == b. For a == b the Norm.3 witness in
/// `cond` supplies the roots of -1.
BaseSolution solve_base(const Integer& a, const Integer& b, const NormalConditions& cond);

/// ceil(b * (3a/2)^ceil_log4(a) * (3b/2)^ceil_log4(b))
Integer solution_bound(const Integer& a, const Integer& b);

struct DescentTrace {
  NormalEquation equation;
  NormalConditions conditions;
  std::vector<ReductionStep> steps;
  NormalEquation base_equation;
  BaseSolution base;
  /// lifted[i] solves steps[i].before()
  std::vector<Solution> lifted;
  Solution raw_solution;
  Solution solution;  // primitive
  Integer bound;

  std::size_t length() const { return steps.size(); }
};

struct NormalSolved {
  Solution solution;
  DescentTrace trace;
};

struct NormalUnsolvable {
  NormCondition failed;
  Integer value;
  Integer modulus;
  Integer prime;  // prime factor of modulus with value a non-residue
  NormalConditions conditions;
};

using NormalOutcome = std::variant<NormalSolved, NormalUnsolvable>;

NormalOutcome solve_normal(const NormalEquation& eq);

}  // namespace ternary
