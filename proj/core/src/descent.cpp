#include "ternary/descent.hpp"

#include <algorithm>
#include <utility>

#include "ternary/arith.hpp"
#include "ternary/legendre.hpp"

namespace ternary {

namespace {

void require_normal(const Integer& a, const Integer& b) {
  if (a < 1 || b < 1) {
    throw InvalidArgument("normal-form coefficients must be positive");
  }
  if (!is_squarefree(a) || !is_squarefree(b)) {
    throw InvalidArgument("normal-form coefficients must be square-free");
  }
}

Integer max3(const Solution& s) { return std::max({s.x, s.y, s.z}); }

}  // namespace

bool satisfies(const NormalEquation& eq, const Solution& s) {
  return !s.is_trivial() && eq.a * s.x * s.x + eq.b * s.y * s.y == s.z * s.z;
}

std::string_view condition_name(NormCondition c) {
  switch (c) {
    case NormCondition::AResidueModB: return "Norm.1";
    case NormCondition::BResidueModA: return "Norm.2";
    case NormCondition::NegProductModD: return "Norm.3";
  }
  return "?";
}

std::string_view base_case_name(BaseCase c) {
  switch (c) {
    case BaseCase::AIsOne: return "a_is_one";
    case BaseCase::BIsOne: return "b_is_one";
    case BaseCase::Equal: return "equal";
  }
  return "?";
}

std::optional<NormCondition> NormalConditions::first_failure() const {
  if (!a_mod_b) return NormCondition::AResidueModB;
  if (!b_mod_a) return NormCondition::BResidueModA;
  if (!neg_product_mod_d) return NormCondition::NegProductModD;
  return std::nullopt;
}

std::pair<Integer, Integer> NormalConditions::subject(NormCondition c,
                                                      const NormalEquation& eq) const {
  switch (c) {
    case NormCondition::AResidueModB: return {eq.a, eq.b};
    case NormCondition::BResidueModA: return {eq.b, eq.a};
    case NormCondition::NegProductModD: return {-(eq.a / d) * (eq.b / d), d};
  }
  throw InternalError("unknown condition");
}

NormalConditions check_normal_conditions(const NormalEquation& eq) {
  require_normal(eq.a, eq.b);
  NormalConditions out;
  out.d = gcd(eq.a, eq.b);
  out.a_mod_b = sqrt_mod_squarefree(eq.a, eq.b);
  out.b_mod_a = sqrt_mod_squarefree(eq.b, eq.a);
  out.neg_product_mod_d = sqrt_mod_squarefree(-(eq.a / out.d) * (eq.b / out.d), out.d);
  return out;
}

NormalEquation ReductionStep::before() const {
  return side == ReductionSide::ReduceA ? NormalEquation{previous_coeff, fixed_coeff}
                                        : NormalEquation{fixed_coeff, previous_coeff};
}

NormalEquation ReductionStep::after() const {
  return side == ReductionSide::ReduceA ? NormalEquation{new_coeff, fixed_coeff}
                                        : NormalEquation{fixed_coeff, new_coeff};
}

ReductionStep reduce_once(const Integer& a, const Integer& b, const Integer& beta) {
  require_normal(a, b);
  if (!(1 < b && b < a)) {
    throw InvalidArgument("reduce_once needs 1 < b < a, got a = " + to_string(a) +
                          ", b = " + to_string(b));
  }
  if (beta < 0 || 2 * beta > a || floor_mod(beta * beta - b, a) != 0) {
    throw InvalidArgument(to_string(beta) + " is not a root of " + to_string(b) +
                          " modulo " + to_string(a) + " in [0, a/2]");
  }

  ReductionStep step;
  step.root = beta;
  step.previous_coeff = a;
  step.fixed_coeff = b;
  step.k = (beta * beta - b) / a;
  if (step.k < 1) {
    throw InternalError("beta^2 - b is not a positive multiple of a");
  }
  auto split = squarefree_split(step.k);
  step.h = split.root_part;
  step.new_coeff = split.free_part;
  if (step.new_coeff < 1 || 4 * step.new_coeff * step.h >= a) {
    throw InternalError("reduced coefficient " + to_string(step.new_coeff) +
                        " violates A*h < a/4 for a = " + to_string(a));
  }

  step.conditions = check_normal_conditions({step.new_coeff, b});
  if (!step.conditions.all_hold()) {
    throw InternalError("solvability conditions lost after reducing " + to_string(a) +
                        " to " + to_string(step.new_coeff));
  }
  return step;
}

Solution lift_beta(const ReductionStep& step, const Solution& inner) {
  const Integer& big_a = step.new_coeff;
  const Integer& b = step.fixed_coeff;
  if (!satisfies(NormalEquation{big_a, b}, inner)) {
    throw InvalidArgument("inner triple does not solve the reduced equation");
  }
  Solution out{big_a * inner.x * step.h, inner.z + inner.y * step.root,
               inner.z * step.root + b * inner.y};
  if (!satisfies(NormalEquation{step.previous_coeff, b}, out)) {
    throw InternalError("lift_beta produced a non-solution");
  }
  return out;
}

Solution lift_alpha(const ReductionStep& step, const Solution& inner) {
  const Integer& a = step.fixed_coeff;
  const Integer& big_b = step.new_coeff;
  if (!satisfies(NormalEquation{a, big_b}, inner)) {
    throw InvalidArgument("inner triple does not solve the reduced equation");
  }
  Solution out{inner.z + inner.x * step.root, big_b * inner.y * step.h,
               inner.z * step.root + a * inner.x};
  if (!satisfies(NormalEquation{a, step.previous_coeff}, out)) {
    throw InternalError("lift_alpha produced a non-solution");
  }
  return out;
}

BaseSolution solve_base(const Integer& a, const Integer& b, const NormalConditions& cond) {
  if (a == 1) return {BaseCase::AIsOne, {1, 0, 1}, std::nullopt};
  if (b == 1) return {BaseCase::BIsOne, {0, 1, 1}, std::nullopt};
  if (a != b) {
    throw InvalidArgument("solve_base needs a == 1, b == 1 or a == b");
  }
  // d == a == b here, so Norm.3 reads -1 R b
  if (!cond.neg_product_mod_d || cond.neg_product_mod_d->modulus != b ||
      floor_mod(cond.neg_product_mod_d->value + 1, b) != 0) {
    throw InvalidArgument("solve_base needs a witness that -1 is a square modulo " +
                          to_string(b));
  }
  const Integer& gamma = cond.neg_product_mod_d->root;
  std::vector<PrimeRoot> roots;
  for (const auto& f : factorize(b)) {
    roots.push_back({f.prime, floor_mod(gamma, f.prime)});
  }
  TwoSquares ts = two_squares_squarefree(b, roots);
  return {BaseCase::Equal, {ts.r, ts.s, b}, ts};
}

Integer solution_bound(const Integer& a, const Integer& b) {
  if (a < 1 || b < 1) {
    throw InvalidArgument("solution_bound needs positive coefficients");
  }
  std::uint32_t la = ceil_log4(a);
  std::uint32_t lb = ceil_log4(b);
  Integer numerator = b * pow(3 * a, la) * pow(3 * b, lb);
  Integer denominator = pow(Integer(2), la + lb);
  return (numerator + denominator - 1) / denominator;
}

NormalOutcome solve_normal(const NormalEquation& eq) {
  NormalConditions conditions = check_normal_conditions(eq);
  if (auto failed = conditions.first_failure()) {
    auto [value, modulus] = conditions.subject(*failed, eq);
    auto prime = first_nonresidue_prime(value, modulus);
    if (!prime) throw InternalError("failed condition without a non-residue prime");
    return NormalUnsolvable{*failed, value, modulus, *prime, conditions};
  }

  DescentTrace trace;
  trace.equation = eq;
  trace.conditions = conditions;

  Integer a = eq.a;
  Integer b = eq.b;
  NormalConditions level = conditions;
  const std::size_t max_steps = ceil_log4(eq.a) + ceil_log4(eq.b) + 2;
  while (a != 1 && b != 1 && a != b) {
    if (trace.steps.size() >= max_steps) {
      throw InternalError("descent exceeded " + std::to_string(max_steps) + " steps");
    }
    ReductionStep step;
    if (a > b) {
      step = reduce_once(a, b, level.b_mod_a->root);
      a = step.new_coeff;
    } else {
      step = reduce_once(b, a, level.a_mod_b->root);
      step.side = ReductionSide::ReduceB;
      std::swap(step.conditions.a_mod_b, step.conditions.b_mod_a);
      b = step.new_coeff;
    }
    step.index = trace.steps.size() + 1;
    level = step.conditions;
    trace.steps.push_back(std::move(step));
  }

  trace.base_equation = {a, b};
  trace.base = solve_base(a, b, level);

  Solution current = trace.base.solution;
  trace.lifted.resize(trace.steps.size());
  for (std::size_t i = trace.steps.size(); i-- > 0;) {
    const auto& step = trace.steps[i];
    current = step.side == ReductionSide::ReduceA ? lift_beta(step, current)
                                                  : lift_alpha(step, current);
    trace.lifted[i] = current;
  }
  trace.raw_solution = current;
  trace.solution = make_primitive(eq, current);
  trace.bound = solution_bound(eq.a, eq.b);

  if (!satisfies(eq, trace.solution)) {
    throw InternalError("descent produced a non-solution");
  }
  if (max3(trace.raw_solution) > trace.bound) {
    throw InternalError("lifted solution exceeds the bound " + to_string(trace.bound));
  }
  return NormalSolved{trace.solution, std::move(trace)};
}

}  // namespace ternary
