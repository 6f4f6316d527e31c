#pragma once

#include <span>

#include "ternary/integer.hpp"

namespace ternary {

/// r^2 + s^2 == n
struct TwoSquares {
  Integer r;
  Integer s;
  Integer n;

  bool verify() const { return r >= 0 && s >= 0 && r * r + s * s == n; }

  friend bool operator==(const TwoSquares&, const TwoSquares&) = default;
};

/// k*p == 1 + a^2 with a <= (p-1)/2 and 1 <= k < p.
struct SeedMultiple {
  Integer k;
  Integer a;
};

/// One rung of the prime descent: multiple*p == a^2 + b^2.
struct MultipleOfPrime {
  Integer multiple;
  Integer a;
  Integer b;

  friend bool operator==(const MultipleOfPrime&, const MultipleOfPrime&) = default;
};

/// A prime together with a square root of -1 modulo it.
struct PrimeRoot {
  Integer prime;
  Integer root;
};

SeedMultiple seed_multiple(const Integer& p, const Integer& root);

/// Replaces h*p = a^2 + b^2 (1 < h < p) by h'*p = a'^2 + b'^2 with 1 <= h' < h.
MultipleOfPrime descend_step(const Integer& p, const MultipleOfPrime& state);

/// Writes p as r^2 + s^2 with r <= s. For odd p, root must satisfy root^2 == -1 (mod p).
TwoSquares prime_two_squares(const Integer& p, const Integer& root);

/// Square-free b as a sum of two squares. `roots` must supply a root of -1 for every
/// prime factor of b; primes are folded in ascending order.
TwoSquares two_squares_squarefree(const Integer& b, std::span<const PrimeRoot> roots);

}  // namespace ternary
