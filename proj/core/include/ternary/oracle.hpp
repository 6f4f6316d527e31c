#pragma once

#include <optional>
#include <vector>

#include "ternary/descent.hpp"
#include "ternary/integer.hpp"

namespace ternary {

// Exhaustive searches used as ground truth. They share nothing with the descent
// beyond the Integer type and the Solution record.

/// First (x, y) in lexicographic order over [0, limit]^2, (x, y) != (0, 0), with
/// a*x^2 + b*y^2 a perfect square z^2.
std::optional<Solution> brute_force_normal(const Integer& a, const Integer& b,
                                           const Integer& limit);

/// First (x, y, z) in lexicographic order over [0, limit]^3, not all zero, with
/// a*x^2 + b*y^2 + c*z^2 == 0. z is solved for rather than scanned.
std::optional<Solution> brute_force_general(const Integer& a, const Integer& b,
                                            const Integer& c, const Integer& limit);

/// Sorted { r^2 mod m : 0 <= r <= m/2 }.
std::vector<Integer> residue_table(const Integer& m);

}  // namespace ternary
