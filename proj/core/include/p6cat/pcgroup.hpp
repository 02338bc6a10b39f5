#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "p6cat/pc.hpp"

namespace p6cat {

struct ConsistencyViolation {
  std::string condition;  // which overlap failed, e.g. "a4*(a3*a2) = (a4*a3)*a2"
  ExponentVector lhs;
  ExponentVector rhs;
};

struct ConsistencyReport {
  bool consistent = false;
  std::uint64_t order = 0;  // p^n when consistent
  std::vector<ConsistencyViolation> violations;

  const ConsistencyViolation& first() const { return violations.front(); }
  std::string summary(int n) const;
};

// A compiled polycyclic engine: a presentation plus its prime context and
// the consistency state. Arithmetic is refused on unverified groups unless
// the override flag was given, because collection against an inconsistent
// presentation silently produces garbage.
//
// Immutable after verification; collection uses per-call scratch buffers,
// so concurrent use of one verified PcGroup is fine.
class PcGroup {
public:
  PcGroup(PcPresentation pres, PrimeContext ctx, bool allow_unverified = false);

  const PcPresentation& presentation() const { return pres_; }
  const PrimeContext& context() const { return ctx_; }
  int gen_count() const { return pres_.gen_count(); }
  Residue prime() const { return pres_.prime(); }
  std::uint64_t order() const { return pres_.order(); }
  bool verified() const { return verified_; }

  // Evaluates all overlap conditions: triple associativity a_k(a_j a_i) =
  // (a_k a_j) a_i for k > j > i, and the power overlaps between a_j^p and
  // a_i, between a_j and a_i^p, and between a_i and its own p-th power.
  // All violations are reported; on success the verified flag is set and
  // the presented group has order exactly p^n. Idempotent.
  const ConsistencyReport& consistency_check();

  ExponentVector identity() const { return {}; }
  ExponentVector generator(int i) const { return pres_.generator(i); }

  ExponentVector collect(const Word& w) const;
  ExponentVector multiply(const ExponentVector& x, const ExponentVector& y) const;
  ExponentVector inverse(const ExponentVector& x) const;
  ExponentVector power(const ExponentVector& x, std::int64_t k) const;
  ExponentVector commutator(const ExponentVector& x, const ExponentVector& y) const;
  ExponentVector conjugate(const ExponentVector& x, const ExponentVector& g) const;

  // Least k >= 1 with x^k = 1; always a power of p.
  std::uint64_t element_order(const ExponentVector& x) const;

  // Visits all p^n normal forms exactly once, in lexicographic order of
  // exponent vectors (so the identity comes first). Refuses when the
  // order exceeds the budget.
  void for_each_element(const std::function<void(const ExponentVector&)>& fn,
                        std::uint64_t budget = kDefaultBudget) const;
  std::vector<ExponentVector> elements(std::uint64_t budget = kDefaultBudget) const;

private:
  void require_usable(const char* who) const;

  PcPresentation pres_;
  PrimeContext ctx_;
  bool allow_unverified_ = false;
  bool verified_ = false;
  std::optional<ConsistencyReport> report_;
};

}  // namespace p6cat
