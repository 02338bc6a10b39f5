#include "p6cat/numtheory.hpp"

#include <numeric>
#include <string>

namespace p6cat {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

namespace {

Residue mod_pow_unsigned(Residue a, std::uint64_t k, Residue p) {
  std::uint64_t base = a % p;
  std::uint64_t acc = 1 % p;
  while (k > 0) {
    if (k & 1) acc = acc * base % p;
    base = base * base % p;
    k >>= 1;
  }
  return static_cast<Residue>(acc);
}

void require_odd_prime(Residue p, const char* who) {
  if (p < 3 || !is_prime(p))
    throw std::invalid_argument(std::string(who) + ": " + std::to_string(p) +
                                " is not an odd prime");
}

}  // namespace

Residue mod_pow(Residue a, std::int64_t k, Residue p) {
  if (p < 2 || !is_prime(p))
    throw std::invalid_argument("mod_pow: modulus " + std::to_string(p) +
                                " is not prime");
  a %= p;
  if (k >= 0) return mod_pow_unsigned(a, static_cast<std::uint64_t>(k), p);
  return mod_pow_unsigned(mod_inverse(a, p),
                          static_cast<std::uint64_t>(-(k + 1)) + 1, p);
}

Residue mod_inverse(Residue a, Residue p) {
  if (p < 2 || !is_prime(p))
    throw std::invalid_argument("mod_inverse: modulus " + std::to_string(p) +
                                " is not prime");
  a %= p;
  if (a == 0) throw std::invalid_argument("mod_inverse: 0 has no inverse");
  // Fermat: a^(p-2) mod p.
  return mod_pow_unsigned(a, p - 2, p);
}

Residue smallest_nonresidue(Residue p) {
  require_odd_prime(p, "smallest_nonresidue");
  for (Residue a = 2; a < p; ++a) {
    if (mod_pow_unsigned(a, (p - 1) / 2, p) == p - 1) return a;
  }
  throw std::logic_error("smallest_nonresidue: none found (impossible)");
}

Residue smallest_primitive_root(Residue p) {
  require_odd_prime(p, "smallest_primitive_root");
  for (Residue a = 2; a < p; ++a) {
    // a is a primitive root iff a^((p-1)/q) != 1 for every prime q | p-1.
    std::uint64_t m = p - 1;
    bool primitive = true;
    std::uint64_t rest = m;
    for (std::uint64_t q = 2; q * q <= rest; ++q) {
      if (rest % q != 0) continue;
      while (rest % q == 0) rest /= q;
      if (mod_pow_unsigned(a, m / q, p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive && rest > 1 && mod_pow_unsigned(a, m / rest, p) == 1)
      primitive = false;
    if (primitive) return a;
  }
  throw std::logic_error("smallest_primitive_root: none found (impossible)");
}

GroupCountTerms group_count_terms(Residue p) {
  if (!is_prime(p))
    throw std::invalid_argument("group_count: " + std::to_string(p) +
                                " is not prime");
  if (p < 7)
    throw UnsupportedPrimeError(
        "group_count: the counting formula holds only for primes p >= 7 "
        "(got " +
        std::to_string(p) + ")");
  GroupCountTerms t;
  std::uint64_t q = p;
  t.quadratic = 3 * q * q;
  t.linear = 39 * q;
  t.constant = 344;
  t.gcd3 = 24 * std::gcd<std::uint64_t>(q - 1, 3);
  t.gcd4 = 11 * std::gcd<std::uint64_t>(q - 1, 4);
  t.gcd5 = 2 * std::gcd<std::uint64_t>(q - 1, 5);
  t.total = t.quadratic + t.linear + t.constant + t.gcd3 + t.gcd4 + t.gcd5;
  return t;
}

std::uint64_t group_count(Residue p) { return group_count_terms(p).total; }

PrimeContext::PrimeContext(Residue p) : p_(p) {
  if (!is_prime(p) || p < 3)
    throw std::invalid_argument("PrimeContext: " + std::to_string(p) +
                                " is not an odd prime");
  nu_ = smallest_nonresidue(p);
  omega_ = smallest_primitive_root(p);
  inv_.resize(p);
  inv_[0] = 0;
  for (Residue a = 1; a < p; ++a) inv_[a] = mod_inverse(a, p);
}

Residue PrimeContext::inv(Residue a) const {
  a %= p_;
  if (a == 0) throw std::invalid_argument("PrimeContext::inv: 0 has no inverse");
  return inv_[a];
}

}  // namespace p6cat
