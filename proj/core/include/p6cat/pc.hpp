#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "p6cat/errors.hpp"
#include "p6cat/numtheory.hpp"

namespace p6cat {

// Hard cap on polycyclic generators. Catalog groups use 6; small oracle
// groups in tests use fewer, alpha/beta specs may briefly carry more.
inline constexpr int kMaxGens = 8;

// Default element-operation budget for enumeration-backed computations.
inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

// A group element in normal form a1^e1 * a2^e2 * ... * an^en with each
// exponent in [0, p). Slot 0 is unused so generator indices are 1-based,
// matching the series position convention (index 1 is the most central
// generator). The all-zero vector is the identity.
struct ExponentVector {
  std::array<std::uint8_t, kMaxGens + 1> e{};

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

  bool is_identity() const { return *this == ExponentVector{}; }

  // Highest index with nonzero exponent; 0 for the identity. This is the
  // pivot used by induced generating sequences: the head subgroups
  // <a1..ak> are the normal members of the underlying central series.
  int pivot() const {
    for (int i = kMaxGens; i >= 1; --i)
      if (e[i] != 0) return i;
    return 0;
  }

  std::string str(int n) const;
};

struct GenPower {
  int gen = 0;
  std::int64_t exp = 0;
};
using Word = std::vector<GenPower>;

// Element codes enumerate normal forms in lexicographic order of
// (e1,...,en): e1 is the most significant digit, so code 0 is the identity.
std::uint32_t encode(const ExponentVector& v, int n, Residue p);
ExponentVector decode(std::uint32_t code, int n, Residue p);

// A power-commutator presentation on n generators over a prime p:
//   a_i^p       = power_rhs(i)        supported on indices < i
//   [a_j, a_i]  = commutator_rhs(j,i) supported on indices < i   (j > i)
// with the convention [x,y] = x^-1 y^-1 x y. Omitted relations are trivial.
// The support conditions say the underlying series is central, which is
// what makes collection from the left terminate.
//
// Arithmetic here is raw collection with no consistency guard; PcGroup
// adds the verified/override layer on top.
class PcPresentation {
public:
  PcPresentation(int gen_count, Residue prime);

  int gen_count() const { return n_; }
  Residue prime() const { return p_; }
  std::uint64_t order() const;  // p^n

  void set_power(int i, const ExponentVector& rhs);
  void set_commutator(int j, int i, const ExponentVector& rhs);

  const ExponentVector& power_rhs(int i) const;
  const ExponentVector& commutator_rhs(int j, int i) const;
  bool commutator_trivial(int j, int i) const;

  ExponentVector identity() const { return {}; }
  ExponentVector generator(int i) const;

  ExponentVector multiply(const ExponentVector& x, const ExponentVector& y) const;
  // x * a_gen^exp with exp already in [0, p).
  ExponentVector multiply_genpow(ExponentVector x, int gen, std::uint32_t exp) const;
  ExponentVector inverse(const ExponentVector& x) const;
  ExponentVector power(const ExponentVector& x, std::int64_t k) const;
  ExponentVector commutator(const ExponentVector& x, const ExponentVector& y) const;
  ExponentVector conjugate(const ExponentVector& x, const ExponentVector& g) const;

  // Normal form of an arbitrary word; generator indices must be in [1, n].
  ExponentVector collect(const Word& w) const;

  std::string describe() const;

  struct Letter {
    std::uint8_t gen;
    std::uint8_t exp;  // in [1, p)
  };

private:
  void check_gen(int i, const char* who) const;
  bool block_swappable(int m, int i, const ExponentVector& c) const;
  void check_rhs_support(const ExponentVector& rhs, int below, const char* who) const;
  // Pop order is from the back; pushes w so its letters pop a1-part first.
  static void push_word(std::vector<Letter>& pending, const ExponentVector& w);
  void collect_pending(ExponentVector& acc, std::vector<Letter>& pending) const;

  int n_;
  Residue p_;
  std::array<ExponentVector, kMaxGens + 1> power_;
  std::array<std::array<ExponentVector, kMaxGens + 1>, kMaxGens + 1> comm_;
};

}  // namespace p6cat
