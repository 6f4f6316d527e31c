#pragma once

#include <cstdint>
#include <vector>

#include "ternary/integer.hpp"

namespace ternary {

struct BezoutCertificate {
  Integer g;  // gcd(|x|, |y|), never negative
  Integer u;
  Integer v;
};

struct PrimeFactor {
  Integer prime;
  std::uint32_t exponent = 0;

  friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

/// n = root_part^2 * free_part with |free_part| square-free; the sign of n stays on free_part.
struct SquareFreeSplit {
  Integer root_part;
  Integer free_part;
};

/// Extended Euclid. u*x + v*y == g holds for every input; gcd(0,0) is (0,0,0).
BezoutCertificate gcd_bezout(const Integer& x, const Integer& y);

Integer gcd(const Integer& x, const Integer& y);

/// Largest r with r*r <= n. Throws on negative n.
Integer isqrt(const Integer& n);

bool is_perfect_square(const Integer& n);

/// Trial division up to isqrt(n). Primes come out strictly increasing.
std::vector<PrimeFactor> factorize(const Integer& n);

bool is_prime(const Integer& n);

SquareFreeSplit squarefree_split(const Integer& n);

bool is_squarefree(const Integer& n);

/// Representative of a in [0, m).
Integer floor_mod(const Integer& a, const Integer& m);

/// w in [0, m) with a*w == 1 (mod m). Throws when gcd(a, m) != 1.
Integer mod_inverse(const Integer& a, const Integer& m);

/// Representative b of a mod m with -m/2 < b <= m/2.
Integer mod_centered(const Integer& a, const Integer& m);

/// Smallest l >= 0 with 4^l >= n.
std::uint32_t ceil_log4(const Integer& n);

Integer abs(const Integer& n);

Integer pow(const Integer& base, std::uint32_t exponent);

}  // namespace ternary
