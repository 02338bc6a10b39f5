#include "p6cat/element_table.hpp"

namespace p6cat {

ElementTable::ElementTable(const PcGroup& g, std::uint64_t budget)
    : g_(&g), n_(g.gen_count()), p_(g.prime()) {
  if (!g.verified())
    throw UncheckedPresentationError(
        "ElementTable: group has not passed the consistency check");
  const std::uint64_t total = g.order();
  if (total > budget)
    throw BudgetExceededError("ElementTable: group order " +
                              std::to_string(total) +
                              " exceeds enumeration budget " +
                              std::to_string(budget));
  n_elems_ = static_cast<std::uint32_t>(total);

  // place_[i] is p^(n-i), the code weight of digit i.
  place_[n_ + 1] = 1;
  place_[n_] = 1;
  for (int i = n_ - 1; i >= 1; --i) place_[i] = place_[i + 1] * p_;

  const PcPresentation& pres = g.presentation();

  // Right-multiplication tables, built for i ascending so that wrap
  // corrections (supported strictly below i) can fold through the tables
  // already built. A generator that commutes with everything is pure code
  // arithmetic; otherwise codes whose digits above i vanish avoid
  // collection, and the rest take one collection each.
  for (int i = 1; i <= n_; ++i) {
    bool commutes_all = true;
    for (int j = i + 1; j <= n_ && commutes_all; ++j)
      commutes_all = pres.commutator_trivial(j, i);
    for (int k = 1; k < i && commutes_all; ++k)
      commutes_all = pres.commutator_trivial(i, k);
    const ExponentVector& wi = pres.power_rhs(i);
    const bool trivial_power = wi.is_identity();
    // does the power word commute with every later generator?
    bool wi_central = true;
    for (int k = 1; k < i && wi_central; ++k) {
      if (wi.e[k] == 0) continue;
      for (int j = k + 1; j <= n_ && wi_central; ++j)
        wi_central = pres.commutator_trivial(j, k);
    }

    right_[i - 1].resize(n_elems_);
    std::uint32_t* tab = right_[i - 1].data();
    const std::uint32_t place = place_[i];
    const std::uint32_t wrap_back = (p_ - 1u) * place;

    if (commutes_all && trivial_power) {
      for (std::uint32_t x = 0; x < n_elems_; ++x) {
        const std::uint32_t digit = x / place % p_;
        tab[x] = digit < p_ - 1u ? x + place : x - wrap_back;
      }
      continue;
    }

    ExponentVector v;  // odometer over codes, avoids decode division
    for (std::uint32_t x = 0; x < n_elems_; ++x) {
      bool clear_above = true;
      for (int k = i + 1; k <= n_ && clear_above; ++k) clear_above = v.e[k] == 0;
      if (clear_above || (commutes_all && wi_central)) {
        const std::uint32_t digit = x / place % p_;
        if (digit < p_ - 1u) {
          tab[x] = x + place;
        } else {
          // a_i^p fires: zero the digit and fold in w_i via lower tables
          std::uint32_t z = x - wrap_back;
          for (int k = i - 1; k >= 1; --k)
            if (wi.e[k]) z = mul_genpow(z, k, wi.e[k]);
          tab[x] = z;
        }
      } else {
        tab[x] = encode(pres.multiply_genpow(v, i, 1));
      }
      for (int k = n_; k >= 1; --k) {
        if (++v.e[k] < p_) break;
        v.e[k] = 0;
      }
    }
  }

  // Inverses by top-down peeling, then conjugates and generator
  // commutators, all in table space.
  inv_.resize(n_elems_);
  for (std::uint32_t x = 0; x < n_elems_; ++x) inv_[x] = divide(x, 0);

  for (int i = 1; i <= n_; ++i) {
    conj_[i - 1].resize(n_elems_);
    const std::uint32_t gi = place_[i];  // code of a_i
    const std::uint32_t gi_inv = inv_[gi];
    for (std::uint32_t x = 0; x < n_elems_; ++x)
      conj_[i - 1][x] = mul(gi_inv, right_[i - 1][x]);
  }

  for (int i = 1; i <= n_; ++i) {
    comm_[i - 1].resize(n_elems_);
    for (std::uint32_t x = 0; x < n_elems_; ++x)
      comm_[i - 1][x] = mul(inv_[x], conj_[i - 1][x]);
  }

  powp_.resize(n_elems_);
  for (std::uint32_t x = 0; x < n_elems_; ++x) {
    std::uint32_t acc = x;
    for (Residue k = 1; k < p_; ++k) acc = mul(acc, x);
    powp_[x] = acc;
  }
}

std::uint32_t ElementTable::mul(std::uint32_t a, std::uint32_t b) const {
  for (int i = 1; i <= n_ && b != 0; ++i) {
    const std::uint32_t e = b / place_[i];
    b %= place_[i];
    if (e) a = mul_genpow(a, i, e);
  }
  return a;
}

std::uint32_t ElementTable::divide(std::uint32_t a, std::uint32_t b) const {
  // Build z = a^-1 b by matching digits of a * z against b from the top of
  // the series filtration: multiplying by a_k^c fixes digit k without
  // touching digits above it.
  std::uint32_t t = a;
  std::uint32_t z = 0;
  for (int k = n_; k >= 1; --k) {
    const std::uint32_t c = (p_ + digit(b, k) - digit(t, k)) % p_;
    if (c) {
      t = mul_genpow(t, k, c);
      z = mul_genpow(z, k, c);
    }
  }
  return z;
}

std::uint32_t ElementTable::power(std::uint32_t x, std::int64_t k) const {
  std::uint64_t m;
  if (k < 0) {
    x = inv_[x];
    m = static_cast<std::uint64_t>(-(k + 1)) + 1;
  } else {
    m = static_cast<std::uint64_t>(k);
  }
  std::uint32_t acc = 0;
  while (m > 0) {
    if (m & 1) acc = mul(acc, x);
    m >>= 1;
    if (m) x = mul(x, x);
  }
  return acc;
}

std::uint64_t ElementTable::element_order(std::uint32_t x) const {
  std::uint64_t ord = 1;
  while (x != 0) {
    x = powp_[x];
    ord *= p_;
  }
  return ord;
}

}  // namespace p6cat
