#include "p6cat/subgroup.hpp"

namespace p6cat {

Subgroup::Subgroup(const PcGroup& g) : g_(&g) {}

// Reduces x against the echelon; if a residue survives, normalizes it into
// an empty slot and queues the closure obligations (pairwise commutators
// and the p-th power). Commutators drop strictly below both pivots and
// p-th powers below their own, so the worklist terminates.
bool Subgroup::insert_reduced(ExponentVector x,
                              std::vector<ExponentVector>& work) {
  const Residue p = g_->prime();
  for (;;) {
    const int piv = x.pivot();
    if (piv == 0) return false;
    if (!filled_[piv]) {
      const Residue lead = x.e[piv];
      x = g_->power(x, g_->context().inv(lead));
      slot_[piv] = x;
      filled_[piv] = true;
      for (int k = 1; k <= kMaxGens; ++k) {
        if (!filled_[k] || k == piv) continue;
        work.push_back(g_->commutator(x, slot_[k]));
        work.push_back(g_->commutator(slot_[k], x));
      }
      work.push_back(g_->power(x, p));
      return true;
    }
    x = g_->multiply(x, g_->power(slot_[piv], p - x.e[piv]));
  }
}

bool Subgroup::add(const ExponentVector& x) {
  std::vector<ExponentVector> work{x};
  bool grew = false;
  while (!work.empty()) {
    ExponentVector t = work.back();
    work.pop_back();
    grew |= insert_reduced(t, work);
  }
  return grew;
}

Subgroup Subgroup::closure(const PcGroup& g,
                           std::span<const ExponentVector> seeds) {
  Subgroup h(g);
  for (const ExponentVector& s : seeds) h.add(s);
  return h;
}

Subgroup Subgroup::normal_closure(const PcGroup& g,
                                  std::span<const ExponentVector> seeds) {
  Subgroup h = closure(g, seeds);
  h.make_normal();
  return h;
}

void Subgroup::make_normal() {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int k = 1; k <= kMaxGens && !changed; ++k) {
      if (!filled_[k]) continue;
      for (int i = 1; i <= g_->gen_count() && !changed; ++i) {
        const ExponentVector c = g_->conjugate(slot_[k], g_->generator(i));
        if (!contains(c)) changed = add(c);
      }
    }
  }
}

Subgroup Subgroup::whole(const PcGroup& g) {
  std::vector<ExponentVector> gens;
  for (int i = 1; i <= g.gen_count(); ++i) gens.push_back(g.generator(i));
  return closure(g, gens);
}

int Subgroup::order_log() const {
  int k = 0;
  for (int i = 1; i <= kMaxGens; ++i) k += filled_[i] ? 1 : 0;
  return k;
}

std::uint64_t Subgroup::order() const {
  std::uint64_t o = 1;
  for (int i = 0; i < order_log(); ++i) o *= g_->prime();
  return o;
}

std::vector<ExponentVector> Subgroup::igs() const {
  std::vector<ExponentVector> out;
  for (int i = 1; i <= kMaxGens; ++i)
    if (filled_[i]) out.push_back(slot_[i]);
  return out;
}

ExponentVector Subgroup::sift(const ExponentVector& x) const {
  const Residue p = g_->prime();
  ExponentVector t = x;
  for (;;) {
    const int piv = t.pivot();
    if (piv == 0 || !filled_[piv]) return t;
    t = g_->multiply(t, g_->power(slot_[piv], p - t.e[piv]));
  }
}

bool Subgroup::contains(const ExponentVector& x) const {
  return sift(x).is_identity();
}

bool Subgroup::contains(const Subgroup& other) const {
  for (int i = 1; i <= kMaxGens; ++i)
    if (other.filled_[i] && !contains(other.slot_[i])) return false;
  return true;
}

bool Subgroup::same_as(const Subgroup& other) const {
  return order_log() == other.order_log() && contains(other);
}

std::vector<ExponentVector> Subgroup::elements(std::uint64_t budget) const {
  if (order() > budget)
    throw BudgetExceededError("Subgroup::elements: order " +
                              std::to_string(order()) + " exceeds budget " +
                              std::to_string(budget));
  std::vector<ExponentVector> out{ExponentVector{}};
  out.reserve(order());
  for (int i = 1; i <= kMaxGens; ++i) {
    if (!filled_[i]) continue;
    const std::size_t base = out.size();
    ExponentVector pw = slot_[i];
    for (Residue e = 1; e < g_->prime(); ++e) {
      for (std::size_t t = 0; t < base; ++t)
        out.push_back(g_->multiply(out[t], pw));
      pw = g_->multiply(pw, slot_[i]);
    }
  }
  return out;
}

}  // namespace p6cat
