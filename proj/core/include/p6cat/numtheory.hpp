#pragma once

#include <cstdint>
#include <vector>

#include "p6cat/errors.hpp"

namespace p6cat {

// Residues are machine integers: every catalog prime fits in 16 bits and
// intermediate products in 64 bits, so no big-integer type is needed.
using Residue = std::uint32_t;

// Deterministic trial division. Intended for n up to ~10^6 (catalog primes
// are tiny); correct for any 64-bit n.
bool is_prime(std::uint64_t n) noexcept;

// a^k mod p. Negative k inverts the base first (requires a != 0 mod p).
Residue mod_pow(Residue a, std::int64_t k, Residue p);

// Multiplicative inverse mod a prime p; a must be nonzero mod p.
Residue mod_inverse(Residue a, Residue p);

// Least a >= 2 with a^((p-1)/2) = -1 mod p.
Residue smallest_nonresidue(Residue p);

// Least a >= 2 whose multiplicative order mod p is exactly p-1.
Residue smallest_primitive_root(Residue p);

// The exact number of isomorphism types of groups of order p^6, valid for
// prime p >= 7:
//   3p^2 + 39p + 344 + 24 gcd(p-1,3) + 11 gcd(p-1,4) + 2 gcd(p-1,5)
std::uint64_t group_count(Residue p);

// Per-term breakdown of group_count, for reporting.
struct GroupCountTerms {
  std::uint64_t quadratic = 0;  // 3p^2
  std::uint64_t linear = 0;     // 39p
  std::uint64_t constant = 344;
  std::uint64_t gcd3 = 0;       // 24 gcd(p-1,3)
  std::uint64_t gcd4 = 0;       // 11 gcd(p-1,4)
  std::uint64_t gcd5 = 0;       // 2 gcd(p-1,5)
  std::uint64_t total = 0;
};
GroupCountTerms group_count_terms(Residue p);

// A prime together with the derived constants used throughout the catalog:
// nu (smallest quadratic non-residue) and omega (smallest primitive root),
// plus an inverse table for fast modular division in collection loops.
// Immutable after construction; safe to share across threads.
class PrimeContext {
public:
  explicit PrimeContext(Residue p);

  Residue prime() const { return p_; }
  Residue nonresidue() const { return nu_; }
  Residue primitive_root() const { return omega_; }

  // Reduce an arbitrary signed value into [0, p).
  Residue reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Residue>(r);
  }

  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>((std::uint64_t{a} * b) % p_);
  }

  Residue inv(Residue a) const;
  Residue pow(Residue a, std::int64_t k) const { return mod_pow(a, k, p_); }

private:
  Residue p_;
  Residue nu_;
  Residue omega_;
  std::vector<Residue> inv_;  // inv_[a] for a in [1, p)
};

}  // namespace p6cat
