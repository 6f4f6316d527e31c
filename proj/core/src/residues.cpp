#include "ternary/residues.hpp"

#include <boost/multiprecision/integer.hpp>

#include "ternary/arith.hpp"

namespace ternary {

namespace {

void require_squarefree_modulus(const Integer& m) {
  if (m < 1) {
    throw InvalidArgument("modulus must be positive, got " + to_string(m));
  }
  if (!is_squarefree(m)) {
    throw InvalidArgument("modulus " + to_string(m) + " is not square-free");
  }
}

Integer lower_root(const Integer& root, const Integer& m) {
  return 2 * root > m ? Integer(m - root) : root;
}

Integer tonelli_shanks(const Integer& a, const Integer& p) {
  using boost::multiprecision::powm;
  Integer q = p - 1;
  std::uint32_t s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  Integer z = 2;
  while (powm(z, (p - 1) / 2, p) != p - 1) ++z;

  Integer c = powm(z, q, p);
  Integer t = powm(a, q, p);
  Integer r = powm(a, (q + 1) / 2, p);
  std::uint32_t m = s;
  while (t != 1) {
    std::uint32_t i = 0;
    Integer t2 = t;
    while (t2 != 1) {
      t2 = t2 * t2 % p;
      ++i;
    }
    Integer b = c;
    for (std::uint32_t j = 0; j + i + 1 < m; ++j) b = b * b % p;
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return r;
}

}  // namespace

bool ResidueWitness::verify() const {
  if (modulus < 1 || root < 0 || 2 * root > modulus) return false;
  return floor_mod(root * root - value, modulus) == 0;
}

std::optional<Integer> sqrt_mod_prime(const Integer& a, const Integer& p) {
  if (!is_prime(p)) {
    throw InvalidArgument("sqrt_mod_prime needs a prime modulus, got " + to_string(p));
  }
  Integer r = floor_mod(a, p);
  if (r == 0 || p == 2) return r;

  if (p < kExhaustiveRootLimit) {
    for (Integer x = 1; 2 * x <= p; ++x) {
      if ((x * x - r) % p == 0) return x;
    }
    return std::nullopt;
  }
  if (boost::multiprecision::powm(r, (p - 1) / 2, p) != 1) return std::nullopt;
  return lower_root(tonelli_shanks(r, p), p);
}

Integer crt_solve(std::span<const Congruence> system) {
  for (std::size_t i = 0; i < system.size(); ++i) {
    const auto& [r, f] = system[i];
    if (f < 1 || r < 0 || r >= f) {
      throw InvalidArgument("congruence needs 0 <= r < f, got " + to_string(r) + " mod " +
                            to_string(f));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (gcd(f, system[j].modulus) != 1) {
        throw InvalidArgument("moduli " + to_string(system[j].modulus) + " and " +
                              to_string(f) + " are not coprime");
      }
    }
  }
  Integer u = 0;
  Integer modulus = 1;
  for (const auto& [r, f] : system) {
    // u + modulus*t == r (mod f)
    Integer t = floor_mod((r - u) * mod_inverse(modulus, f), f);
    u += modulus * t;
    modulus *= f;
  }
  return u;
}

ResidueWitness combine_roots(const ResidueWitness& w1, const ResidueWitness& w2) {
  if (w1.value != w2.value) {
    throw InvalidArgument("witnesses certify different values: " + to_string(w1.value) +
                          " and " + to_string(w2.value));
  }
  if (!w1.verify() || !w2.verify()) {
    throw InvalidArgument("combine_roots given a witness that does not verify");
  }
  if (gcd(w1.modulus, w2.modulus) != 1) {
    throw InvalidArgument("moduli " + to_string(w1.modulus) + " and " + to_string(w2.modulus) +
                          " are not coprime");
  }
  const Congruence system[] = {{floor_mod(w1.root, w1.modulus), w1.modulus},
                               {floor_mod(w2.root, w2.modulus), w2.modulus}};
  Integer mn = w1.modulus * w2.modulus;
  ResidueWitness out{w1.value, mn, lower_root(crt_solve(system), mn)};
  if (!out.verify()) {
    throw InternalError("combined root " + to_string(out.root) + " fails modulo " +
                        to_string(mn));
  }
  return out;
}

std::optional<ResidueWitness> sqrt_mod_squarefree(const Integer& a, const Integer& m) {
  require_squarefree_modulus(m);
  ResidueWitness acc{a, 1, 0};
  for (const auto& f : factorize(m)) {
    auto root = sqrt_mod_prime(a, f.prime);
    if (!root) return std::nullopt;
    acc = combine_roots(acc, {a, f.prime, *root});
  }
  return acc;
}

bool is_square_mod(const Integer& a, const Integer& m) {
  return sqrt_mod_squarefree(a, m).has_value();
}

std::optional<Integer> first_nonresidue_prime(const Integer& a, const Integer& m) {
  require_squarefree_modulus(m);
  for (const auto& f : factorize(m)) {
    if (!sqrt_mod_prime(a, f.prime)) return f.prime;
  }
  return std::nullopt;
}

}  // namespace ternary
