#include "ternary/oracle.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <set>

#include "ternary/arith.hpp"

namespace ternary {

namespace {

template <std::uint32_t M>
constexpr std::array<bool, M> square_table() {
  std::array<bool, M> t{};
  for (std::uint32_t r = 0; r < M; ++r) t[(r * r) % M] = true;
  return t;
}

constexpr std::uint64_t square_mask64() {
  std::uint64_t mask = 0;
  for (std::uint64_t r = 0; r < 64; ++r) mask |= std::uint64_t{1} << ((r * r) % 64);
  return mask;
}

constexpr std::uint64_t kMask64 = square_mask64();
constexpr auto kSquares63 = square_table<63>();
constexpr auto kSquares65 = square_table<65>();
constexpr auto kSquares11 = square_table<11>();

// v < 2^62
inline bool square_u64(std::uint64_t v, std::uint64_t& root) {
  if (((kMask64 >> (v & 63)) & 1) == 0) return false;
  if (!kSquares63[v % 63] || !kSquares65[v % 65] || !kSquares11[v % 11]) return false;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  root = r;
  return r * r == v;
}

constexpr std::int64_t kFastLimit = std::int64_t{1} << 61;

bool fits_fast(const Integer& bound) { return bound < kFastLimit; }

std::optional<Solution> normal_fast(std::uint64_t a, std::uint64_t b, std::uint64_t limit) {
  for (std::uint64_t x = 0; x <= limit; ++x) {
    const std::uint64_t base = a * x * x;
    for (std::uint64_t y = (x == 0 ? 1 : 0); y <= limit; ++y) {
      std::uint64_t z;
      if (square_u64(base + b * y * y, z)) return Solution{x, y, z};
    }
  }
  return std::nullopt;
}

std::optional<Solution> normal_slow(const Integer& a, const Integer& b, const Integer& limit) {
  for (Integer x = 0; x <= limit; ++x) {
    for (Integer y = (x == 0 ? 1 : 0); y <= limit; ++y) {
      Integer v = a * x * x + b * y * y;
      if (is_perfect_square(v)) return Solution{x, y, isqrt(v)};
    }
  }
  return std::nullopt;
}

// z^2 == -(a x^2 + b y^2) / c, found through w = -(a x^2 + b y^2) * c == (c z)^2.
std::optional<Solution> general_fast(std::int64_t a, std::int64_t b, std::int64_t c,
                                     std::int64_t limit) {
  for (std::int64_t x = 0; x <= limit; ++x) {
    const std::int64_t base = a * x * x;
    for (std::int64_t y = 0; y <= limit; ++y) {
      if (x == 0 && y == 0) continue;
      const std::int64_t t = base + b * y * y;
      const std::int64_t w = -t * c;
      std::uint64_t cz;
      if (w < 0 || !square_u64(static_cast<std::uint64_t>(w), cz)) continue;
      if (t % c != 0) continue;
      const std::int64_t q = -t / c;
      std::uint64_t z;
      if (q >= 0 && square_u64(static_cast<std::uint64_t>(q), z) &&
          z <= static_cast<std::uint64_t>(limit)) {
        return Solution{x, y, z};
      }
    }
  }
  return std::nullopt;
}

std::optional<Solution> general_slow(const Integer& a, const Integer& b, const Integer& c,
                                     const Integer& limit) {
  for (Integer x = 0; x <= limit; ++x) {
    for (Integer y = 0; y <= limit; ++y) {
      if (x == 0 && y == 0) continue;
      Integer t = -(a * x * x + b * y * y);
      if (t % c != 0) continue;
      Integer q = t / c;
      if (is_perfect_square(q)) {
        Integer z = isqrt(q);
        if (z <= limit) return Solution{x, y, z};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Solution> brute_force_normal(const Integer& a, const Integer& b,
                                           const Integer& limit) {
  if (limit < 1) throw InvalidArgument("oracle limit must be at least 1");
  std::optional<Solution> hit;
  if (a >= 0 && b >= 0 && fits_fast((a + b) * limit * limit)) {
    hit = normal_fast(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b),
                      static_cast<std::uint64_t>(limit));
  } else {
    hit = normal_slow(a, b, limit);
  }
  if (hit && a * hit->x * hit->x + b * hit->y * hit->y != hit->z * hit->z) {
    throw InternalError("oracle hit fails substitution");
  }
  return hit;
}

std::optional<Solution> brute_force_general(const Integer& a, const Integer& b,
                                            const Integer& c, const Integer& limit) {
  if (limit < 1) throw InvalidArgument("oracle limit must be at least 1");
  if (c == 0) return Solution{0, 0, 1};
  const bool same_sign = (a > 0 && b > 0 && c > 0) || (a < 0 && b < 0 && c < 0);
  if (same_sign) return std::nullopt;

  std::optional<Solution> hit;
  if (fits_fast(abs(c) * (abs(a) + abs(b)) * limit * limit)) {
    hit = general_fast(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b),
                       static_cast<std::int64_t>(c), static_cast<std::int64_t>(limit));
  } else {
    hit = general_slow(a, b, c, limit);
  }
  if (hit && a * hit->x * hit->x + b * hit->y * hit->y + c * hit->z * hit->z != 0) {
    throw InternalError("oracle hit fails substitution");
  }
  return hit;
}

std::vector<Integer> residue_table(const Integer& m) {
  if (m < 1) throw InvalidArgument("residue_table needs m >= 1");
  std::set<Integer> seen;
  for (Integer r = 0; 2 * r <= m; ++r) seen.insert(r * r % m);
  return {seen.begin(), seen.end()};
}

}  // namespace ternary
