#pragma once

#include <cstdint>
#include <vector>

#include "p6cat/pcgroup.hpp"

namespace p6cat {

// Dense per-group operation tables over element codes (lexicographic
// encoding of normal forms, identity = 0). Built once per group, these
// turn the enumeration-heavy invariant computations (centre, conjugacy
// classes, agemo chain, central series) into table walks.
//
// Requires a verified group whose order fits the budget. Memory is
// ~20 * order * 4 bytes, i.e. ~9 MB at p = 7 and ~390 MB at p = 13, which
// is why profile computation at large primes sits behind a flag.
class ElementTable {
public:
  ElementTable(const PcGroup& g, std::uint64_t budget = kDefaultBudget);

  const PcGroup& group() const { return *g_; }
  std::uint32_t size() const { return n_elems_; }
  int gen_count() const { return n_; }
  Residue prime() const { return p_; }

  std::uint32_t encode(const ExponentVector& v) const {
    return p6cat::encode(v, n_, p_);
  }
  ExponentVector decode(std::uint32_t c) const { return p6cat::decode(c, n_, p_); }

  // x * a_i
  std::uint32_t right(std::uint32_t x, int i) const {
    return right_[i - 1][x];
  }
  // a_i^-1 * x * a_i
  std::uint32_t conj(std::uint32_t x, int i) const { return conj_[i - 1][x]; }
  // [x, a_i]
  std::uint32_t comm(std::uint32_t x, int i) const { return comm_[i - 1][x]; }
  std::uint32_t inv(std::uint32_t x) const { return inv_[x]; }
  std::uint32_t pow_p(std::uint32_t x) const { return powp_[x]; }

  // x * a_i^e by repeated table steps; e reduced mod p by the caller.
  std::uint32_t mul_genpow(std::uint32_t x, int i, std::uint32_t e) const {
    const std::uint32_t* t = right_[i - 1].data();
    while (e--) x = t[x];
    return x;
  }

  // a * b, folding the digits of b.
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;

  // The z with a * z = b.
  std::uint32_t divide(std::uint32_t a, std::uint32_t b) const;

  std::uint32_t power(std::uint32_t x, std::int64_t k) const;

  // Least k with x^k = identity; a power of p.
  std::uint64_t element_order(std::uint32_t x) const;

  // Digit of a code at generator index i (1-based).
  std::uint32_t digit(std::uint32_t code, int i) const {
    return code / place_[i] % p_;
  }

private:
  const PcGroup* g_;
  int n_;
  Residue p_;
  std::uint32_t n_elems_;
  std::array<std::uint32_t, kMaxGens + 2> place_{};  // p^(n-i) per index
  std::array<std::vector<std::uint32_t>, kMaxGens> right_;
  std::array<std::vector<std::uint32_t>, kMaxGens> conj_;
  std::array<std::vector<std::uint32_t>, kMaxGens> comm_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint32_t> powp_;
};

}  // namespace p6cat
