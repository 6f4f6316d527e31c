#include "ternary/arith.hpp"

#include <boost/multiprecision/integer.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <limits>
#include <numeric>
#include <utility>

namespace ternary {

namespace mp = boost::multiprecision;

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (digits.empty()) {
    throw InvalidArgument("not an integer: '" + std::string(text) + "'");
  }
  Integer value = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw InvalidArgument("not an integer: '" + std::string(text) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? Integer(-value) : value;
}

Integer abs(const Integer& n) { return n < 0 ? Integer(-n) : n; }

Integer pow(const Integer& base, std::uint32_t exponent) {
  return mp::pow(base, exponent);
}

BezoutCertificate gcd_bezout(const Integer& x, const Integer& y) {
  // Invariant: old_r == old_s*|x| + old_t*|y|, likewise for (r, s, t).
  Integer old_r = abs(x), r = abs(y);
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    old_r = std::exchange(r, Integer(old_r - q * r));
    old_s = std::exchange(s, Integer(old_s - q * s));
    old_t = std::exchange(t, Integer(old_t - q * t));
  }
  if (old_r == 0) {
    return {0, 0, 0};
  }
  if (x < 0) old_s = -old_s;
  if (y < 0) old_t = -old_t;
  return {old_r, old_s, old_t};
}

Integer gcd(const Integer& x, const Integer& y) { return mp::gcd(abs(x), abs(y)); }

Integer isqrt(const Integer& n) {
  if (n < 0) {
    throw InvalidArgument("isqrt of a negative number: " + to_string(n));
  }
  return mp::sqrt(n);
}

bool is_perfect_square(const Integer& n) {
  if (n < 0) return false;
  Integer r = isqrt(n);
  return r * r == n;
}

namespace {

// Miller-Rabin with the first 13 prime bases is exact below 3.3e24.
const Integer kDeterministicLimit("3317044064679887385961981");
constexpr std::uint32_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  for (b %= m; e > 0; e >>= 1) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
  }
  return r;
}

bool strong_probable_prime(std::uint64_t n, std::uint64_t base) {
  std::uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  std::uint64_t x = powmod(base, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

bool strong_probable_prime(const Integer& n, const Integer& base) {
  Integer d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  Integer x = mp::powm(base, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == n - 1) return true;
  }
  return false;
}

bool probable_prime_odd(const Integer& n) {
  if (n <= std::numeric_limits<std::uint64_t>::max()) {
    auto m = static_cast<std::uint64_t>(n);
    for (auto b : kBases) {
      if (m == b) return true;
      if (!strong_probable_prime(m, b)) return false;
    }
    return true;
  }
  for (auto b : kBases) {
    if (!strong_probable_prime(n, Integer(b))) return false;
  }
  return n < kDeterministicLimit || mp::miller_rabin_test(n, 25);
}

std::uint64_t gcd_of(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }
Integer gcd_of(const Integer& a, const Integer& b) { return mp::gcd(a, b); }
mp::uint128_t gcd_of(const mp::uint128_t& a, const mp::uint128_t& b) { return mp::gcd(a, b); }

// Brent's variant of Pollard rho; returns a proper factor of an odd composite n.
template <class T, class MulMod>
T rho(const T& n, MulMod mulmod_n) {
  for (T c = 1;; ++c) {
    auto f = [&](const T& v) {
      T r = mulmod_n(v, v) + c;
      return r >= n ? T(r - n) : r;
    };
    T y = 2, x = 2, q = 1, g = 1, ys = 2;
    std::uint64_t r = 1;
    constexpr std::uint64_t kBatch = 64;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(kBatch, r - k); ++i) {
          y = f(y);
          q = mulmod_n(q, x > y ? T(x - y) : T(y - x));
        }
        g = gcd_of(q, n);
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd_of(x > ys ? T(x - ys) : T(ys - x), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

Integer proper_factor(const Integer& n) {
  if (n <= std::numeric_limits<std::uint64_t>::max()) {
    auto m = static_cast<std::uint64_t>(n);
    return rho<std::uint64_t>(m, [m](std::uint64_t a, std::uint64_t b) { return mulmod(a, b, m); });
  }
  if (msb(n) < 126) {
    const auto m = static_cast<mp::uint128_t>(n);
    const mp::uint256_t wide = m;
    auto f = rho<mp::uint128_t>(m, [&wide](const mp::uint128_t& a, const mp::uint128_t& b) {
      return static_cast<mp::uint128_t>(mp::uint256_t(a) * b % wide);
    });
    return Integer(f);
  }
  return rho<Integer>(n, [&n](const Integer& a, const Integer& b) { return Integer(a * b % n); });
}

void split(const Integer& n, std::vector<Integer>& primes) {
  if (n == 1) return;
  if (probable_prime_odd(n)) {
    primes.push_back(n);
    return;
  }
  Integer d = proper_factor(n);
  split(d, primes);
  split(n / d, primes);
}

constexpr std::uint32_t kTrialLimit = 1000;

}  // namespace

std::vector<PrimeFactor> factorize(const Integer& n) {
  if (n <= 0) {
    throw InvalidArgument("factorize requires n >= 1, got " + to_string(n));
  }
  std::vector<PrimeFactor> out;
  Integer rest = n;
  auto take = [&](std::uint32_t p) {
    std::uint32_t e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) out.push_back({Integer(p), e});
  };
  take(2);
  take(3);
  for (std::uint32_t p = 5; p < kTrialLimit && Integer(p) * p <= rest; p += 6) {
    take(p);
    take(p + 2);
  }
  if (rest > 1 && rest < Integer(kTrialLimit) * kTrialLimit) {
    out.push_back({rest, 1});
    return out;
  }
  std::vector<Integer> large;
  split(rest, large);
  std::sort(large.begin(), large.end());
  for (const auto& p : large) {
    if (!out.empty() && out.back().prime == p) {
      ++out.back().exponent;
    } else {
      out.push_back({p, 1});
    }
  }
  return out;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  for (std::uint32_t p = 2; p < 50; ++p) {
    if (n % p == 0) return n == p;
  }
  return probable_prime_odd(n);
}

SquareFreeSplit squarefree_split(const Integer& n) {
  if (n == 0) {
    throw InvalidArgument("squarefree_split of zero");
  }
  Integer root = 1;
  Integer free = 1;
  for (const auto& [p, e] : factorize(abs(n))) {
    root *= pow(p, e / 2);
    if (e % 2 == 1) free *= p;
  }
  return {root, n < 0 ? Integer(-free) : free};
}

bool is_squarefree(const Integer& n) {
  if (n == 0) {
    throw InvalidArgument("is_squarefree of zero");
  }
  for (const auto& f : factorize(abs(n))) {
    if (f.exponent > 1) return false;
  }
  return true;
}

Integer floor_mod(const Integer& a, const Integer& m) {
  if (m <= 0) {
    throw InvalidArgument("modulus must be positive, got " + to_string(m));
  }
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

Integer mod_inverse(const Integer& a, const Integer& m) {
  if (m < 1) {
    throw InvalidArgument("modulus must be positive, got " + to_string(m));
  }
  auto cert = gcd_bezout(a, m);
  if (cert.g != 1) {
    throw InvalidArgument(to_string(a) + " is not invertible modulo " + to_string(m));
  }
  return floor_mod(cert.u, m);
}

Integer mod_centered(const Integer& a, const Integer& m) {
  Integer r = floor_mod(a, m);
  if (2 * r > m) r -= m;
  return r;
}

std::uint32_t ceil_log4(const Integer& n) {
  if (n < 1) {
    throw InvalidArgument("ceil_log4 requires n >= 1, got " + to_string(n));
  }
  std::uint32_t l = 0;
  Integer power = 1;
  while (power < n) {
    power *= 4;
    ++l;
  }
  return l;
}

}  // namespace ternary
