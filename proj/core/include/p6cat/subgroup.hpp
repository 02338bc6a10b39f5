#pragma once

#include <span>
#include <vector>

#include "p6cat/pcgroup.hpp"

namespace p6cat {

// A subgroup of a PcGroup held as an induced generating sequence: one
// normalized member per occupied pivot, where the pivot of an element is
// its highest nonzero exponent index (the head subgroups <a1..ak> are the
// normal members of the central series, so the pivot digit of a product
// is additive and sifting works echelon-style). Members are kept in
// increasing pivot order with leading entry 1.
//
// The sequence is closed under pairwise commutators and p-th powers, so
// membership testing by sifting is exact and |H| = p^(members).
class Subgroup {
public:
  // Trivial subgroup.
  explicit Subgroup(const PcGroup& g);

  // Smallest subgroup containing the seeds.
  static Subgroup closure(const PcGroup& g,
                          std::span<const ExponentVector> seeds);

  // Smallest normal subgroup containing the seeds (closure under
  // conjugation by the group generators).
  static Subgroup normal_closure(const PcGroup& g,
                                 std::span<const ExponentVector> seeds);

  static Subgroup whole(const PcGroup& g);

  const PcGroup& parent() const { return *g_; }

  // log_p of the order.
  int order_log() const;
  std::uint64_t order() const;

  // Members in increasing pivot order.
  std::vector<ExponentVector> igs() const;

  // Residue of x after echelon reduction; identity iff x is a member.
  ExponentVector sift(const ExponentVector& x) const;
  bool contains(const ExponentVector& x) const;
  bool contains(const Subgroup& other) const;
  bool same_as(const Subgroup& other) const;

  // All p^k members, ordered by the exponent odometer over the igs.
  std::vector<ExponentVector> elements(std::uint64_t budget = kDefaultBudget) const;

  // Grows this subgroup to the closure of itself and x. Returns true if
  // the subgroup grew.
  bool add(const ExponentVector& x);

  // Grows to the closure under conjugation by all group generators.
  void make_normal();

private:
  bool insert_reduced(ExponentVector x, std::vector<ExponentVector>& work);

  const PcGroup* g_;
  std::array<ExponentVector, kMaxGens + 1> slot_{};
  std::array<bool, kMaxGens + 1> filled_{};
};

}  // namespace p6cat
