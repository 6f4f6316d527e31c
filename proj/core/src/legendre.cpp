#include "ternary/legendre.hpp"

#include <functional>

#include "ternary/arith.hpp"

namespace ternary {

namespace {

constexpr std::string_view kSlot[] = {"a", "b", "c"};

std::string slot_name(int i) { return std::string(kSlot[i]); }

Integer sign_of(const Integer& n) { return n < 0 ? Integer(-1) : Integer(1); }

Integer component(const Solution& s, int i) { return i == 0 ? s.x : i == 1 ? s.y : s.z; }

void set_component(Solution& s, int i, Integer v) {
  (i == 0 ? s.x : i == 1 ? s.y : s.z) = std::move(v);
}

Integer root_from(const Integer& numerator, const Integer& unit, const Integer& modulus) {
  Integer inverse;
  try {
    inverse = mod_inverse(unit, modulus);
  } catch (const InvalidArgument&) {
    throw InvalidArgument("solution is not primitive: " + to_string(unit) +
                          " is not invertible modulo " + to_string(modulus));
  }
  return abs(mod_centered(numerator * inverse, modulus));
}

ResidueWitness checked(ResidueWitness w) {
  if (!w.verify()) {
    throw InternalError("necessity witness " + to_string(w.root) + " fails for " +
                        to_string(w.value) + " mod " + to_string(w.modulus));
  }
  return w;
}

Solution primitive_part(const Solution& sol, const std::function<bool(const Solution&)>& ok) {
  if (!ok(sol)) {
    throw InvalidArgument("make_primitive given a triple that is not a solution");
  }
  Solution s{abs(sol.x), abs(sol.y), abs(sol.z)};
  while (true) {
    Integer shared = 1;
    for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 2}}) {
      Integer g = gcd(component(s, i), component(s, j));
      if (g > 1) {
        shared = g;
        break;
      }
    }
    if (shared == 1) break;
    Integer p = factorize(shared).front().prime;
    if (s.x % p != 0 || s.y % p != 0 || s.z % p != 0) {
      throw InternalError("prime " + to_string(p) +
                          " divides two components but not the third");
    }
    s = {s.x / p, s.y / p, s.z / p};
  }
  if (!ok(s)) throw InternalError("primitive reduction broke the solution");
  return s;
}

}  // namespace

bool satisfies(const GeneralEquation& eq, const Solution& s) {
  return !s.is_trivial() && eq.a * s.x * s.x + eq.b * s.y * s.y + eq.c * s.z * s.z == 0;
}

GeneralEquation validate_input(const GeneralEquation& eq, const Integer& max_coefficient) {
  for (int i = 0; i < 3; ++i) {
    if (eq[i] == 0) {
      throw HypothesisError(HypothesisKind::ZeroCoefficient, {i}, slot_name(i) + " is zero");
    }
  }
  for (int i = 0; i < 3; ++i) {
    if (abs(eq[i]) > max_coefficient) {
      throw HypothesisError(HypothesisKind::TooLarge, {i},
                            slot_name(i) + " exceeds the coefficient cap " +
                                to_string(max_coefficient));
    }
  }
  for (int i = 0; i < 3; ++i) {
    if (!is_squarefree(eq[i])) {
      throw HypothesisError(HypothesisKind::NotSquareFree, {i},
                            slot_name(i) + " is not square-free");
    }
  }
  for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 2}}) {
    if (gcd(eq[i], eq[j]) != 1) {
      throw HypothesisError(HypothesisKind::NotCoprime, {i, j},
                            slot_name(i) + " and " + slot_name(j) + " are not coprime");
    }
  }
  if (sign_of(eq.a) == sign_of(eq.b) && sign_of(eq.b) == sign_of(eq.c)) {
    throw HypothesisError(HypothesisKind::AllSameSign, {0, 1, 2},
                          "a, b and c all have the same sign");
  }
  return eq;
}

NormalEquation validate_input(const NormalEquation& eq, const Integer& max_coefficient) {
  const Integer* slots[] = {&eq.a, &eq.b};
  for (int i = 0; i < 2; ++i) {
    if (*slots[i] == 0) {
      throw HypothesisError(HypothesisKind::ZeroCoefficient, {i}, slot_name(i) + " is zero");
    }
    if (*slots[i] < 0) {
      throw HypothesisError(HypothesisKind::AllSameSign, {i},
                            slot_name(i) + " must be positive in the normal form");
    }
    if (*slots[i] > max_coefficient) {
      throw HypothesisError(HypothesisKind::TooLarge, {i},
                            slot_name(i) + " exceeds the coefficient cap " +
                                to_string(max_coefficient));
    }
    if (!is_squarefree(*slots[i])) {
      throw HypothesisError(HypothesisKind::NotSquareFree, {i},
                            slot_name(i) + " is not square-free");
    }
  }
  return eq;
}

GeneralEquation Canonicalization::restore() const {
  GeneralEquation out;
  for (int i = 0; i < 3; ++i) {
    out[permutation[i]] = flipped ? Integer(-canonical[i]) : canonical[i];
  }
  return out;
}

Solution Canonicalization::restore(const Solution& s) const {
  Solution out;
  for (int i = 0; i < 3; ++i) set_component(out, permutation[i], component(s, i));
  return out;
}

Canonicalization canonicalize(const GeneralEquation& eq) {
  Canonicalization out;
  int negatives = 0;
  for (int i = 0; i < 3; ++i) negatives += eq[i] < 0 ? 1 : 0;
  out.flipped = negatives == 2;

  GeneralEquation signed_eq = eq;
  if (out.flipped) {
    for (int i = 0; i < 3; ++i) signed_eq[i] = -signed_eq[i];
  }
  int slot = 0;
  int negative_slot = 2;
  for (int i = 0; i < 3; ++i) {
    if (signed_eq[i] < 0) {
      negative_slot = i;
    } else {
      out.permutation[slot++] = i;
    }
  }
  out.permutation[2] = negative_slot;
  for (int i = 0; i < 3; ++i) out.canonical[i] = signed_eq[out.permutation[i]];
  return out;
}

std::string_view condition_name(LegCondition c) {
  switch (c) {
    case LegCondition::NegABModC: return "Leg.1";
    case LegCondition::NegBCModA: return "Leg.2";
    case LegCondition::NegACModB: return "Leg.3";
  }
  return "?";
}

std::optional<LegCondition> LegendreConditions::first_failure() const {
  if (!neg_ab_mod_c) return LegCondition::NegABModC;
  if (!neg_bc_mod_a) return LegCondition::NegBCModA;
  if (!neg_ac_mod_b) return LegCondition::NegACModB;
  return std::nullopt;
}

std::pair<Integer, Integer> condition_subject(LegCondition c, const GeneralEquation& eq) {
  switch (c) {
    case LegCondition::NegABModC: return {-eq.a * eq.b, abs(eq.c)};
    case LegCondition::NegBCModA: return {-eq.b * eq.c, abs(eq.a)};
    case LegCondition::NegACModB: return {-eq.a * eq.c, abs(eq.b)};
  }
  throw InternalError("unknown condition");
}

LegendreConditions check_legendre_conditions(const GeneralEquation& eq) {
  auto witness = [&](LegCondition c) {
    auto [value, modulus] = condition_subject(c, eq);
    return sqrt_mod_squarefree(value, modulus);
  };
  return {witness(LegCondition::NegABModC), witness(LegCondition::NegBCModA),
          witness(LegCondition::NegACModB)};
}

NormalEquation to_normal(const GeneralEquation& eq) {
  if (!(eq.a > 0 && eq.b > 0 && eq.c < 0)) {
    throw InvalidArgument("to_normal needs a canonical equation (a, b > 0 > c)");
  }
  NormalEquation out{-eq.a * eq.c, -eq.b * eq.c};
  if (!is_squarefree(out.a) || !is_squarefree(out.b)) {
    throw InternalError("normal-form coefficients are not square-free");
  }
  return out;
}

Solution from_normal_solution(const GeneralEquation& eq, const Solution& sol) {
  if (!satisfies(to_normal(eq), sol)) {
    throw InvalidArgument("triple does not solve the normal-form equation");
  }
  if (sol.z % eq.c != 0) {
    throw InternalError(to_string(eq.c) + " does not divide " + to_string(sol.z));
  }
  Solution out{sol.x, sol.y, abs(sol.z / eq.c)};
  if (!satisfies(eq, out)) {
    throw InternalError("normal-form solution does not map back");
  }
  return out;
}

GeneralEquation normal_to_general(const NormalEquation& eq) {
  Integer d = gcd(eq.a, eq.b);
  return {eq.a / d, eq.b / d, -d};
}

Solution general_to_normal_solution(const NormalEquation& eq, const Solution& sol) {
  if (!satisfies(normal_to_general(eq), sol)) {
    throw InvalidArgument("triple does not solve the associated general equation");
  }
  Solution out{sol.x, sol.y, gcd(eq.a, eq.b) * sol.z};
  if (!satisfies(eq, out)) {
    throw InternalError("general solution does not map to the normal form");
  }
  return out;
}

Solution make_primitive(const NormalEquation& eq, const Solution& sol) {
  return primitive_part(sol, [&](const Solution& s) { return satisfies(eq, s); });
}

Solution make_primitive(const GeneralEquation& eq, const Solution& sol) {
  return primitive_part(sol, [&](const Solution& s) { return satisfies(eq, s); });
}

GeneralOutcome solve_general(const GeneralEquation& input, const Integer& max_coefficient) {
  GeneralEquation eq = validate_input(input, max_coefficient);
  Canonicalization canon = canonicalize(eq);
  LegendreConditions conditions = check_legendre_conditions(canon.canonical);
  if (auto failed = conditions.first_failure()) {
    auto [value, modulus] = condition_subject(*failed, canon.canonical);
    auto prime = first_nonresidue_prime(value, modulus);
    if (!prime) throw InternalError("failed condition without a non-residue prime");
    return GeneralUnsolvable{*failed, value, modulus, *prime, canon, conditions};
  }

  NormalEquation normal = to_normal(canon.canonical);
  NormalOutcome outcome = solve_normal(normal);
  auto* solved = std::get_if<NormalSolved>(&outcome);
  if (solved == nullptr) {
    throw InternalError("Legendre conditions hold but the normal form is unsolvable");
  }
  Solution canonical_sol = from_normal_solution(canon.canonical, solved->solution);
  Solution sol = make_primitive(eq, canon.restore(canonical_sol));
  return GeneralSolved{sol, canon, normal, std::move(solved->trace)};
}

NormalConditions extract_necessity_witnesses(const NormalEquation& eq, const Solution& sol) {
  if (!satisfies(eq, sol)) {
    throw InvalidArgument("triple does not solve the equation");
  }
  NormalConditions out;
  out.d = gcd(eq.a, eq.b);
  Integer a1 = eq.a / out.d;
  Integer b1 = eq.b / out.d;
  out.b_mod_a = checked({eq.b, eq.a, root_from(sol.z, sol.y, eq.a)});
  out.a_mod_b = checked({eq.a, eq.b, root_from(sol.z, sol.x, eq.b)});
  out.neg_product_mod_d = checked({-a1 * b1, out.d, root_from(b1 * sol.y, sol.x, out.d)});
  return out;
}

LegendreConditions extract_necessity_witnesses(const GeneralEquation& eq, const Solution& sol) {
  if (!satisfies(eq, sol)) {
    throw InvalidArgument("triple does not solve the equation");
  }
  LegendreConditions out;
  out.neg_ab_mod_c =
      checked({-eq.a * eq.b, abs(eq.c), root_from(eq.b * sol.y, sol.x, abs(eq.c))});
  out.neg_bc_mod_a =
      checked({-eq.b * eq.c, abs(eq.a), root_from(eq.c * sol.z, sol.y, abs(eq.a))});
  out.neg_ac_mod_b =
      checked({-eq.a * eq.c, abs(eq.b), root_from(eq.c * sol.z, sol.x, abs(eq.b))});
  return out;
}

}  // namespace ternary
