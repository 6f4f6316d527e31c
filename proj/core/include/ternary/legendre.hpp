#pragma once

#include <array>
#include <vector>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "ternary/descent.hpp"
#include "ternary/integer.hpp"
#include "ternary/residues.hpp"

namespace ternary {

/// a*x^2 + b*y^2 + c*z^2 = 0
struct GeneralEquation {
  Integer a;
  Integer b;
  Integer c;

  const Integer& operator[](std::size_t i) const { return i == 0 ? a : i == 1 ? b : c; }
  Integer& operator[](std::size_t i) { return i == 0 ? a : i == 1 ? b : c; }

  friend bool operator==(const GeneralEquation&, const GeneralEquation&) = default;
};

bool satisfies(const GeneralEquation& eq, const Solution& s);

inline const Integer kDefaultMaxCoefficient = Integer(1'000'000'000'000LL);

enum class HypothesisKind { ZeroCoefficient, TooLarge, NotSquareFree, NotCoprime, AllSameSign };

/// Input violates a hypothesis of the solver. `slots` names the offending
/// coefficients by index (0 = a, 1 = b, 2 = c); NotCoprime carries two.
class HypothesisError : public InvalidArgument {
 public:
  HypothesisError(HypothesisKind kind, std::vector<int> slots, const std::string& what)
      : InvalidArgument(what), kind_(kind), slots_(std::move(slots)) {}

  HypothesisKind kind() const { return kind_; }
  const std::vector<int>& slots() const { return slots_; }

 private:
  HypothesisKind kind_;
  std::vector<int> slots_;
};

GeneralEquation validate_input(const GeneralEquation& eq,
                               const Integer& max_coefficient = kDefaultMaxCoefficient);

/// Same checks for the normal form: both coefficients positive and square-free.
NormalEquation validate_input(const NormalEquation& eq,
                              const Integer& max_coefficient = kDefaultMaxCoefficient);

/// canonical[i] == (flipped ? -1 : 1) * input[permutation[i]], with canonical a, b > 0 > c.
struct Canonicalization {
  std::array<int, 3> permutation{0, 1, 2};
  bool flipped = false;
  GeneralEquation canonical;

  GeneralEquation restore() const;
  /// Moves a solution of the canonical equation back to the input's slots.
  Solution restore(const Solution& s) const;
};

Canonicalization canonicalize(const GeneralEquation& eq);

enum class LegCondition {
  NegABModC,  // Leg.1: -ab R c
  NegBCModA,  // Leg.2: -bc R a
  NegACModB,  // Leg.3: -ac R b
};

std::string_view condition_name(LegCondition c);

struct LegendreConditions {
  std::optional<ResidueWitness> neg_ab_mod_c;
  std::optional<ResidueWitness> neg_bc_mod_a;
  std::optional<ResidueWitness> neg_ac_mod_b;

  bool all_hold() const { return neg_ab_mod_c && neg_bc_mod_a && neg_ac_mod_b; }
  std::optional<LegCondition> first_failure() const;
};

/// (value, |modulus|) the condition asks about.
std::pair<Integer, Integer> condition_subject(LegCondition c, const GeneralEquation& eq);

LegendreConditions check_legendre_conditions(const GeneralEquation& eq);

/// (-ac, -bc) for a canonical equation.
NormalEquation to_normal(const GeneralEquation& eq);

/// (x, y, Z) on A x^2 + B y^2 = Z^2 to (x, y, |Z/c|) on the canonical equation.
Solution from_normal_solution(const GeneralEquation& eq, const Solution& sol);

/// (a/d, b/d, -d) with d = gcd(a, b).
GeneralEquation normal_to_general(const NormalEquation& eq);

/// (x, y, z) on normal_to_general(eq) to (x, y, d*z) on eq.
Solution general_to_normal_solution(const NormalEquation& eq, const Solution& sol);

Solution make_primitive(const NormalEquation& eq, const Solution& sol);
Solution make_primitive(const GeneralEquation& eq, const Solution& sol);

struct GeneralSolved {
  Solution solution;
  Canonicalization canonicalization;
  NormalEquation normal;
  DescentTrace trace;
};

struct GeneralUnsolvable {
  LegCondition failed;
  Integer value;
  Integer modulus;
  Integer prime;
  Canonicalization canonicalization;
  LegendreConditions conditions;
};

using GeneralOutcome = std::variant<GeneralSolved, GeneralUnsolvable>;

GeneralOutcome solve_general(const GeneralEquation& eq,
                             const Integer& max_coefficient = kDefaultMaxCoefficient);

/// Residue roots read off a primitive solution, as in the necessity argument:
/// b == (z y^-1)^2 (mod a), a == (z x^-1)^2 (mod b), -(a/d)(b/d) == ((b/d) y x^-1)^2 (mod d).
NormalConditions extract_necessity_witnesses(const NormalEquation& eq, const Solution& sol);

/// -bc == (c z y^-1)^2 (mod a) and its two rotations.
LegendreConditions extract_necessity_witnesses(const GeneralEquation& eq, const Solution& sol);

}  // namespace ternary
