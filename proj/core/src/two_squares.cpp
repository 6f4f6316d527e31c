#include "ternary/two_squares.hpp"

#include <utility>

#include "ternary/arith.hpp"

namespace ternary {

SeedMultiple seed_multiple(const Integer& p, const Integer& root) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    throw InvalidArgument("seed_multiple needs an odd prime, got " + to_string(p));
  }
  if (floor_mod(root * root + 1, p) != 0) {
    throw InvalidArgument(to_string(root) + " is not a square root of -1 modulo " +
                          to_string(p));
  }
  Integer a = abs(mod_centered(root, p));
  Integer k = (1 + a * a) / p;
  if (k < 1 || k >= p) {
    throw InternalError("seed multiple out of range for p = " + to_string(p));
  }
  return {k, a};
}

MultipleOfPrime descend_step(const Integer& p, const MultipleOfPrime& state) {
  const auto& [h, a, b] = state;
  if (!(h > 1 && h < p) || h * p != a * a + b * b) {
    throw InvalidArgument("descend_step needs h*p == a^2 + b^2 with 1 < h < p");
  }

  MultipleOfPrime next;
  if (h % 2 == 0) {
    bool a_even = a % 2 == 0;
    bool b_even = b % 2 == 0;
    if (a_even != b_even) {
      throw InternalError("even multiple with mixed-parity squares");
    }
    if (a_even) {
      if (h % 4 != 0) {
        throw InternalError("both squares even but 4 does not divide " + to_string(h));
      }
      next = {h / 4, abs(a / 2), abs(b / 2)};
    } else {
      next = {h / 2, abs((a - b) / 2), abs((a + b) / 2)};
    }
  } else {
    Integer alpha = mod_centered(a, h);
    Integer beta = mod_centered(b, h);
    Integer norm = alpha * alpha + beta * beta;
    Integer u = a * alpha + b * beta;
    Integer v = a * beta - b * alpha;
    if (norm % h != 0 || u % h != 0 || v % h != 0) {
      throw InternalError("odd-case quotient is not integral for h = " + to_string(h));
    }
    next = {norm / h, abs(u / h), abs(v / h)};
  }

  if (next.multiple < 1 || next.multiple >= h ||
      next.multiple * p != next.a * next.a + next.b * next.b) {
    throw InternalError("descend_step failed to shrink " + to_string(h));
  }
  return next;
}

TwoSquares prime_two_squares(const Integer& p, const Integer& root) {
  if (p == 2) return {1, 1, 2};
  auto [k, a] = seed_multiple(p, root);
  MultipleOfPrime state{k, 1, a};
  // the multiple strictly drops each round, so at most k-1 rounds
  for (Integer guard = k; state.multiple > 1; --guard) {
    if (guard == 0) throw InternalError("two-squares descent did not terminate");
    state = descend_step(p, state);
  }
  if (state.a > state.b) std::swap(state.a, state.b);
  return {state.a, state.b, p};
}

TwoSquares two_squares_squarefree(const Integer& b, std::span<const PrimeRoot> roots) {
  if (b < 1 || !is_squarefree(b)) {
    throw InvalidArgument("two_squares_squarefree needs a square-free b >= 1, got " +
                          to_string(b));
  }
  auto root_for = [&](const Integer& p) -> const Integer& {
    for (const auto& pr : roots) {
      if (pr.prime == p && floor_mod(pr.root * pr.root + 1, p) == 0) return pr.root;
    }
    throw InvalidArgument("-1 is not certified as a square modulo the prime " + to_string(p));
  };

  bool first = true;
  Integer r = 0, s = 1;
  for (const auto& f : factorize(b)) {
    TwoSquares part = prime_two_squares(f.prime, f.prime == 2 ? Integer(1) : root_for(f.prime));
    if (first) {
      r = part.r;
      s = part.s;
      first = false;
      continue;
    }
    // (r^2 + s^2)(c^2 + d^2) = (rc + sd)^2 + (rd - sc)^2
    Integer nr = abs(r * part.r + s * part.s);
    Integer ns = abs(r * part.s - s * part.r);
    r = std::move(nr);
    s = std::move(ns);
  }
  TwoSquares out{r, s, b};
  if (!out.verify()) {
    throw InternalError("two-squares fold does not recompose " + to_string(b));
  }
  return out;
}

}  // namespace ternary
