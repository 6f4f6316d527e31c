#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ternary/integer.hpp"

namespace ternary {

/// Certifies that `value` is a square modulo `modulus`: root^2 == value (mod modulus),
/// with 0 <= root <= modulus/2.
struct ResidueWitness {
  Integer value;
  Integer modulus;
  Integer root;

  bool verify() const;

  friend bool operator==(const ResidueWitness&, const ResidueWitness&) = default;
};

struct Congruence {
  Integer residue;
  Integer modulus;
};

/// Pairwise-coprime moduli, each residue in [0, modulus).
using CongruenceSystem = std::vector<Congruence>;

/// Primes below this bound are searched exhaustively; Tonelli-Shanks above.
inline const Integer kExhaustiveRootLimit = 1'000'000;

/// The root in [0, p/2] of a mod p, or nullopt when a is a non-residue. Throws on composite p.
std::optional<Integer> sqrt_mod_prime(const Integer& a, const Integer& p);

/// Unique u in [0, prod f_i) solving the system. Throws on shared factors between moduli.
Integer crt_solve(std::span<const Congruence> system);

/// Glues witnesses for the same value modulo coprime m and n into one modulo m*n.
ResidueWitness combine_roots(const ResidueWitness& w1, const ResidueWitness& w2);

/// Canonical witness for a modulo a square-free m: per-prime roots in ascending
/// prime order, folded through combine_roots.
std::optional<ResidueWitness> sqrt_mod_squarefree(const Integer& a, const Integer& m);

bool is_square_mod(const Integer& a, const Integer& m);

/// Smallest prime factor of the square-free m modulo which a is not a square.
std::optional<Integer> first_nonresidue_prime(const Integer& a, const Integer& m);

}  // namespace ternary
