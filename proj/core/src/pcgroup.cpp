#include "p6cat/pcgroup.hpp"

#include <sstream>

namespace p6cat {

std::string ConsistencyReport::summary(int n) const {
  std::ostringstream os;
  if (consistent) {
    os << "consistent, order " << order;
  } else {
    os << violations.size() << " violated overlap condition(s); first: "
       << violations.front().condition << " gives "
       << violations.front().lhs.str(n) << " vs "
       << violations.front().rhs.str(n);
  }
  return os.str();
}

PcGroup::PcGroup(PcPresentation pres, PrimeContext ctx, bool allow_unverified)
    : pres_(std::move(pres)), ctx_(std::move(ctx)),
      allow_unverified_(allow_unverified) {
  if (ctx_.prime() != pres_.prime())
    throw std::invalid_argument("PcGroup: presentation prime " +
                                std::to_string(pres_.prime()) +
                                " does not match context prime " +
                                std::to_string(ctx_.prime()));
}

const ConsistencyReport& PcGroup::consistency_check() {
  if (report_) return *report_;

  ConsistencyReport rep;
  const int n = pres_.gen_count();
  const Residue p = pres_.prime();

  auto record = [&](std::string cond, const ExponentVector& lhs,
                    const ExponentVector& rhs) {
    if (!(lhs == rhs))
      rep.violations.push_back({std::move(cond), lhs, rhs});
  };

  // Triple overlaps a_k (a_j a_i) = (a_k a_j) a_i, k > j > i.
  for (int k = 3; k <= n; ++k) {
    for (int j = 2; j < k; ++j) {
      for (int i = 1; i < j; ++i) {
        const ExponentVector gk = pres_.generator(k);
        const ExponentVector gj = pres_.generator(j);
        const ExponentVector gi = pres_.generator(i);
        const ExponentVector lhs = pres_.multiply(gk, pres_.multiply(gj, gi));
        const ExponentVector rhs = pres_.multiply(pres_.multiply(gk, gj), gi);
        record("a" + std::to_string(k) + "*(a" + std::to_string(j) + "*a" +
                   std::to_string(i) + ") = (a" + std::to_string(k) + "*a" +
                   std::to_string(j) + ")*a" + std::to_string(i),
               lhs, rhs);
      }
    }
  }

  // Power overlaps. With w_i = a_i^p as given by the relation:
  //   w_j * a_i        = a_j^(p-1) * (a_j * a_i)      (j > i)
  //   a_j * w_i        = (a_j * a_i) * a_i^(p-1)      (j > i)
  //   a_i * w_i        = w_i * a_i
  for (int j = 1; j <= n; ++j) {
    const ExponentVector gj = pres_.generator(j);
    const ExponentVector wj = pres_.power_rhs(j);
    ExponentVector gj_pm1;
    gj_pm1.e[j] = static_cast<std::uint8_t>(p - 1);

    for (int i = 1; i < j; ++i) {
      const ExponentVector gi = pres_.generator(i);
      {
        const ExponentVector lhs = pres_.multiply(wj, gi);
        const ExponentVector rhs =
            pres_.multiply(gj_pm1, pres_.multiply(gj, gi));
        record("a" + std::to_string(j) + "^p * a" + std::to_string(i) +
                   " = a" + std::to_string(j) + "^(p-1) * (a" +
                   std::to_string(j) + "*a" + std::to_string(i) + ")",
               lhs, rhs);
      }
      {
        const ExponentVector wi = pres_.power_rhs(i);
        ExponentVector gi_pm1;
        gi_pm1.e[i] = static_cast<std::uint8_t>(p - 1);
        const ExponentVector lhs = pres_.multiply(gj, wi);
        const ExponentVector rhs =
            pres_.multiply(pres_.multiply(gj, gi), gi_pm1);
        record("a" + std::to_string(j) + " * a" + std::to_string(i) +
                   "^p = (a" + std::to_string(j) + "*a" + std::to_string(i) +
                   ") * a" + std::to_string(i) + "^(p-1)",
               lhs, rhs);
      }
    }

    record("a" + std::to_string(j) + " * a" + std::to_string(j) + "^p = a" +
               std::to_string(j) + "^p * a" + std::to_string(j),
           pres_.multiply(gj, wj), pres_.multiply(wj, gj));
  }

  rep.consistent = rep.violations.empty();
  rep.order = rep.consistent ? pres_.order() : 0;
  report_ = std::move(rep);
  verified_ = report_->consistent;
  return *report_;
}

void PcGroup::require_usable(const char* who) const {
  if (!verified_ && !allow_unverified_)
    throw UncheckedPresentationError(
        std::string(who) +
        ": presentation has not passed the consistency check "
        "(construct with allow_unverified to override)");
}

ExponentVector PcGroup::collect(const Word& w) const {
  require_usable("collect");
  return pres_.collect(w);
}

ExponentVector PcGroup::multiply(const ExponentVector& x,
                                 const ExponentVector& y) const {
  require_usable("multiply");
  return pres_.multiply(x, y);
}

ExponentVector PcGroup::inverse(const ExponentVector& x) const {
  require_usable("inverse");
  return pres_.inverse(x);
}

ExponentVector PcGroup::power(const ExponentVector& x, std::int64_t k) const {
  require_usable("power");
  return pres_.power(x, k);
}

ExponentVector PcGroup::commutator(const ExponentVector& x,
                                   const ExponentVector& y) const {
  require_usable("commutator");
  return pres_.commutator(x, y);
}

ExponentVector PcGroup::conjugate(const ExponentVector& x,
                                  const ExponentVector& g) const {
  require_usable("conjugate");
  return pres_.conjugate(x, g);
}

std::uint64_t PcGroup::element_order(const ExponentVector& x) const {
  require_usable("element_order");
  ExponentVector t = x;
  std::uint64_t ord = 1;
  while (!t.is_identity()) {
    t = pres_.power(t, pres_.prime());
    ord *= pres_.prime();
  }
  return ord;
}

void PcGroup::for_each_element(
    const std::function<void(const ExponentVector&)>& fn,
    std::uint64_t budget) const {
  require_usable("for_each_element");
  const std::uint64_t total = order();
  if (total > budget)
    throw BudgetExceededError("for_each_element: group order " +
                              std::to_string(total) +
                              " exceeds enumeration budget " +
                              std::to_string(budget));
  const int n = pres_.gen_count();
  const Residue p = pres_.prime();
  ExponentVector v;
  for (std::uint64_t c = 0;; ++c) {
    fn(v);
    if (c + 1 == total) break;
    // lexicographic successor: increment the last digit with carry
    for (int i = n; i >= 1; --i) {
      if (++v.e[i] < p) break;
      v.e[i] = 0;
    }
  }
}

std::vector<ExponentVector> PcGroup::elements(std::uint64_t budget) const {
  std::vector<ExponentVector> out;
  out.reserve(order());
  for_each_element([&](const ExponentVector& v) { out.push_back(v); }, budget);
  return out;
}

}  // namespace p6cat
