#include "p6cat/pc.hpp"

#include <sstream>

namespace p6cat {

std::string ExponentVector::str(int n) const {
  std::ostringstream os;
  os << "(";
  for (int i = 1; i <= n; ++i) {
    if (i > 1) os << ",";
    os << int(e[i]);
  }
  os << ")";
  return os.str();
}

std::uint32_t encode(const ExponentVector& v, int n, Residue p) {
  std::uint32_t code = 0;
  for (int i = 1; i <= n; ++i) code = code * p + v.e[i];
  return code;
}

ExponentVector decode(std::uint32_t code, int n, Residue p) {
  ExponentVector v;
  for (int i = n; i >= 1; --i) {
    v.e[i] = static_cast<std::uint8_t>(code % p);
    code /= p;
  }
  return v;
}

PcPresentation::PcPresentation(int gen_count, Residue prime)
    : n_(gen_count), p_(prime) {
  if (n_ < 1 || n_ > kMaxGens)
    throw std::invalid_argument("PcPresentation: generator count " +
                                std::to_string(gen_count) + " outside [1, " +
                                std::to_string(kMaxGens) + "]");
  if (!is_prime(prime) || prime < 3)
    throw std::invalid_argument("PcPresentation: " + std::to_string(prime) +
                                " is not an odd prime");
}

std::uint64_t PcPresentation::order() const {
  std::uint64_t o = 1;
  for (int i = 0; i < n_; ++i) o *= p_;
  return o;
}

void PcPresentation::check_gen(int i, const char* who) const {
  if (i < 1 || i > n_)
    throw std::invalid_argument(std::string(who) + ": generator index " +
                                std::to_string(i) + " outside [1, " +
                                std::to_string(n_) + "]");
}

void PcPresentation::check_rhs_support(const ExponentVector& rhs, int below,
                                       const char* who) const {
  for (int k = below; k <= kMaxGens; ++k) {
    if (rhs.e[k] != 0)
      throw std::invalid_argument(
          std::string(who) + ": right-hand side touches generator " +
          std::to_string(k) + ", must be supported strictly below " +
          std::to_string(below));
  }
  for (int k = 1; k < below; ++k) {
    if (rhs.e[k] >= p_)
      throw std::invalid_argument(std::string(who) +
                                  ": exponent not reduced mod p");
  }
}

void PcPresentation::set_power(int i, const ExponentVector& rhs) {
  check_gen(i, "set_power");
  check_rhs_support(rhs, i, "set_power");
  power_[i] = rhs;
}

void PcPresentation::set_commutator(int j, int i, const ExponentVector& rhs) {
  check_gen(j, "set_commutator");
  check_gen(i, "set_commutator");
  if (j <= i)
    throw std::invalid_argument("set_commutator: key must have j > i, got [a" +
                                std::to_string(j) + ",a" + std::to_string(i) +
                                "]");
  check_rhs_support(rhs, i, "set_commutator");
  comm_[j][i] = rhs;
}

const ExponentVector& PcPresentation::power_rhs(int i) const {
  check_gen(i, "power_rhs");
  return power_[i];
}

const ExponentVector& PcPresentation::commutator_rhs(int j, int i) const {
  check_gen(j, "commutator_rhs");
  check_gen(i, "commutator_rhs");
  if (j <= i)
    throw std::invalid_argument("commutator_rhs: key must have j > i");
  return comm_[j][i];
}

bool PcPresentation::commutator_trivial(int j, int i) const {
  return commutator_rhs(j, i).is_identity();
}

ExponentVector PcPresentation::generator(int i) const {
  check_gen(i, "generator");
  ExponentVector v;
  v.e[i] = 1;
  return v;
}

void PcPresentation::push_word(std::vector<Letter>& pending,
                               const ExponentVector& w) {
  // Pop order must read the normal word left to right, so push the
  // highest-index letter first.
  for (int k = kMaxGens; k >= 1; --k) {
    if (w.e[k] != 0)
      pending.push_back(Letter{static_cast<std::uint8_t>(k), w.e[k]});
  }
}

// True when the correction word c = [a_m, a_i] commutes with a_m, a_i and
// itself, and its support has trivial p-th powers; then the whole block
// swap a_m^b * a_i^e = a_i^e * a_m^b * c^(be mod p) is exact.
bool PcPresentation::block_swappable(int m, int i,
                                     const ExponentVector& c) const {
  for (int k = 1; k < i; ++k) {
    if (c.e[k] == 0) continue;
    if (!comm_[m][k].is_identity() || !comm_[i][k].is_identity()) return false;
    if (!power_[k].is_identity()) return false;
    for (int l = k + 1; l < i; ++l)
      if (c.e[l] != 0 && !comm_[l][k].is_identity()) return false;
  }
  return true;
}

// Collection from the left. Invariant maintained throughout: the group
// element equals acc * L_t * L_{t-1} * ... * L_1 where L_t is the back of
// the pending stack. Each step pops one letter block a_i^e and either
// merges it into acc (no nonzero digit above i), swaps it past the whole
// top block when the correction is benign, or moves one unit left past
// the top generator, spawning the commutator correction. Termination
// follows from the central-series support conditions on the relation RHS.
void PcPresentation::collect_pending(ExponentVector& acc,
                                     std::vector<Letter>& pending) const {
  while (!pending.empty()) {
    const Letter L = pending.back();
    pending.pop_back();
    const int i = L.gen;

    int m = 0;  // highest index above i with a nonzero digit in acc
    for (int k = n_; k > i; --k) {
      if (acc.e[k] != 0) {
        m = k;
        break;
      }
    }

    if (m == 0) {
      const unsigned t = unsigned(acc.e[i]) + unsigned(L.exp);
      if (t >= p_) {
        acc.e[i] = static_cast<std::uint8_t>(t - p_);
        push_word(pending, power_[i]);  // a_i^p = w_i, supported below i
      } else {
        acc.e[i] = static_cast<std::uint8_t>(t);
      }
      continue;
    }

    const ExponentVector& c = comm_[m][i];
    const std::uint8_t b = acc.e[m];
    if (c.is_identity()) {
      // commuting generators: swap the whole blocks
      acc.e[m] = 0;
      pending.push_back(Letter{static_cast<std::uint8_t>(m), b});
      pending.push_back(L);
      continue;
    }
    if (block_swappable(m, i, c)) {
      acc.e[m] = 0;
      const std::uint32_t t =
          std::uint32_t(b) * std::uint32_t(L.exp) % p_;
      if (t != 0) {
        for (int k = i - 1; k >= 1; --k) {
          const std::uint32_t ck = c.e[k] * t % p_;
          if (ck)
            pending.push_back(
                Letter{static_cast<std::uint8_t>(k), static_cast<std::uint8_t>(ck)});
        }
      }
      pending.push_back(Letter{static_cast<std::uint8_t>(m), b});
      pending.push_back(L);
      continue;
    }

    // acc = b * a_m, so  acc * a_i^e = b * (a_m a_i) * a_i^(e-1)
    //                               = b * a_i * a_m * [a_m,a_i] * a_i^(e-1).
    acc.e[m] -= 1;
    if (L.exp > 1)
      pending.push_back(Letter{L.gen, static_cast<std::uint8_t>(L.exp - 1)});
    push_word(pending, c);
    pending.push_back(Letter{static_cast<std::uint8_t>(m), 1});
    pending.push_back(Letter{L.gen, 1});
  }
}

namespace {

// One scratch stack per thread: every public operation drains it before
// returning, and the nested calls (power inside collect, inverse inside
// power) are strictly sequential, so reuse is safe and keeps the hot
// collection path allocation-free.
std::vector<PcPresentation::Letter>& scratch_stack() {
  thread_local std::vector<PcPresentation::Letter> pending;
  return pending;
}

}  // namespace

ExponentVector PcPresentation::multiply(const ExponentVector& x,
                                        const ExponentVector& y) const {
  ExponentVector acc = x;
  std::vector<Letter>& pending = scratch_stack();
  pending.clear();
  push_word(pending, y);
  collect_pending(acc, pending);
  return acc;
}

ExponentVector PcPresentation::multiply_genpow(ExponentVector x, int gen,
                                               std::uint32_t exp) const {
  check_gen(gen, "multiply_genpow");
  if (exp == 0) return x;
  if (exp >= p_)
    throw std::invalid_argument("multiply_genpow: exponent not reduced mod p");
  std::vector<Letter>& pending = scratch_stack();
  pending.clear();
  pending.push_back(Letter{static_cast<std::uint8_t>(gen),
                           static_cast<std::uint8_t>(exp)});
  collect_pending(x, pending);
  return x;
}

ExponentVector PcPresentation::inverse(const ExponentVector& x) const {
  // Peel digits from the top: multiplying by a_k^(p - d) zeroes digit k
  // without touching digits above it, so the applied letters, in order,
  // form the inverse word.
  ExponentVector t = x;
  ExponentVector result;
  for (int k = n_; k >= 1; --k) {
    if (t.e[k] == 0) continue;
    const std::uint32_t d = p_ - t.e[k];
    t = multiply_genpow(t, k, d);
    result = multiply_genpow(result, k, d);
  }
  return result;
}

ExponentVector PcPresentation::power(const ExponentVector& x,
                                     std::int64_t k) const {
  ExponentVector base = x;
  std::uint64_t m;
  if (k < 0) {
    base = inverse(base);
    m = static_cast<std::uint64_t>(-(k + 1)) + 1;
  } else {
    m = static_cast<std::uint64_t>(k);
  }
  ExponentVector acc;
  while (m > 0) {
    if (m & 1) acc = multiply(acc, base);
    m >>= 1;
    if (m) base = multiply(base, base);
  }
  return acc;
}

ExponentVector PcPresentation::commutator(const ExponentVector& x,
                                          const ExponentVector& y) const {
  // [x,y] = (yx)^-1 (xy)
  return multiply(inverse(multiply(y, x)), multiply(x, y));
}

ExponentVector PcPresentation::conjugate(const ExponentVector& x,
                                         const ExponentVector& g) const {
  return multiply(inverse(g), multiply(x, g));
}

ExponentVector PcPresentation::collect(const Word& w) const {
  ExponentVector acc;
  for (const GenPower& gp : w) {
    check_gen(gp.gen, "collect");
    // a_i^p is not the identity in general, so exponents cannot simply be
    // reduced mod p; route large or negative exponents through power().
    if (gp.exp >= 0 && gp.exp < static_cast<std::int64_t>(p_)) {
      acc = multiply_genpow(acc, gp.gen, static_cast<std::uint32_t>(gp.exp));
    } else {
      acc = multiply(acc, power(generator(gp.gen), gp.exp));
    }
  }
  return acc;
}

std::string PcPresentation::describe() const {
  std::ostringstream os;
  os << "pc presentation: n=" << n_ << " p=" << p_ << "\n";
  for (int i = 1; i <= n_; ++i) {
    if (!power_[i].is_identity())
      os << "  a" << i << "^p = " << power_[i].str(n_) << "\n";
  }
  for (int j = 2; j <= n_; ++j)
    for (int i = 1; i < j; ++i)
      if (!comm_[j][i].is_identity())
        os << "  [a" << j << ",a" << i << "] = " << comm_[j][i].str(n_) << "\n";
  return os.str();
}

}  // namespace p6cat
