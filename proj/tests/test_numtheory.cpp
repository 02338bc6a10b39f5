#include <doctest.h>

#include "p6cat/numtheory.hpp"

using namespace p6cat;

namespace {

// brute-force oracles: square residues by enumeration, multiplicative
// order by stepping
bool is_square_mod(Residue a, Residue p) {
  for (Residue x = 0; x < p; ++x)
    if (std::uint64_t(x) * x % p == a) return true;
  return false;
}

Residue brute_nonresidue(Residue p) {
  for (Residue a = 2;; ++a)
    if (!is_square_mod(a, p)) return a;
}

Residue mult_order(Residue a, Residue p) {
  Residue ord = 1;
  std::uint64_t t = a % p;
  while (t != 1) {
    t = t * a % p;
    ++ord;
  }
  return ord;
}

Residue brute_primitive_root(Residue p) {
  for (Residue a = 2;; ++a)
    if (mult_order(a, p) == p - 1) return a;
}

std::vector<Residue> primes_in(Residue lo, Residue hi) {
  std::vector<Residue> out;
  for (Residue n = lo; n <= hi; ++n)
    if (is_prime(n)) out.push_back(n);
  return out;
}

}  // namespace

TEST_CASE("is_prime by trial division") {
  CHECK(!is_prime(0));
  CHECK(!is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(!is_prime(49));
  CHECK(is_prime(7919));
  CHECK(!is_prime(7919ull * 7927ull));
}

TEST_CASE("smallest nonresidue matches brute force") {
  // frozen values computed from the square sets: squares mod 7 = {1,2,4},
  // mod 11 = {1,3,4,5,9}, mod 13 = {1,3,4,9,10,12}
  CHECK(smallest_nonresidue(7) == 3);
  CHECK(smallest_nonresidue(11) == 2);
  CHECK(smallest_nonresidue(13) == 2);
  for (Residue p : primes_in(5, 1000)) {
    const Residue nu = smallest_nonresidue(p);
    CHECK(nu == brute_nonresidue(p));
    // nu^((p-1)/2) = -1 and everything below nu is a residue
    CHECK(mod_pow(nu, (p - 1) / 2, p) == p - 1);
    for (Residue a = 1; a < nu; ++a) CHECK(is_square_mod(a, p));
  }
  CHECK_THROWS_AS(smallest_nonresidue(6), std::invalid_argument);
  CHECK_THROWS_AS(smallest_nonresidue(2), std::invalid_argument);
}

TEST_CASE("smallest primitive root matches brute force") {
  // frozen values: ord_7(2) = 3 so 3 is the first primitive root mod 7
  CHECK(smallest_primitive_root(7) == 3);
  CHECK(smallest_primitive_root(11) == 2);
  CHECK(smallest_primitive_root(13) == 2);
  for (Residue p : primes_in(5, 1000))
    CHECK(smallest_primitive_root(p) == brute_primitive_root(p));
  CHECK_THROWS_AS(smallest_primitive_root(15), std::invalid_argument);
}

TEST_CASE("primitive root generates the whole multiplicative group") {
  for (Residue p : primes_in(5, 1000)) {
    const Residue w = smallest_primitive_root(p);
    std::vector<bool> seen(p, false);
    std::uint64_t t = 1;
    for (Residue k = 0; k < p - 1; ++k) {
      seen[t] = true;
      t = t * w % p;
    }
    for (Residue a = 1; a < p; ++a) CHECK(seen[a]);
  }
}

TEST_CASE("group_count formula") {
  // substitution into 3p^2 + 39p + 344 + 24gcd(p-1,3) + 11gcd(p-1,4)
  // + 2gcd(p-1,5): gcd terms (3,2,1), (1,2,5), (3,4,1)
  CHECK(group_count(7) == 860);
  CHECK(group_count(11) == 1192);
  CHECK(group_count(13) == 1476);
  CHECK_THROWS_AS(group_count(5), UnsupportedPrimeError);
  CHECK_THROWS_AS(group_count(6), std::invalid_argument);
  for (Residue p : primes_in(7, 1000)) {
    const GroupCountTerms t = group_count_terms(p);
    CHECK(t.total == t.quadratic + t.linear + t.constant + t.gcd3 + t.gcd4 + t.gcd5);
    CHECK(t.total >= 3ull * p * p);
  }
}

TEST_CASE("mod_pow and mod_inverse") {
  CHECK(mod_pow(3, 6, 7) == 1);  // Fermat
  CHECK(mod_pow(2, 0, 7) == 1);
  CHECK(mod_pow(2, -1, 7) == 4);
  CHECK(mod_inverse(1, 13) == 1);
  CHECK(mod_inverse(3, 7) == 5);  // 3*5 = 15 = 1 mod 7
  CHECK_THROWS_AS(mod_inverse(0, 7), std::invalid_argument);
  for (Residue p : primes_in(5, 200))
    for (Residue a = 1; a < p; ++a)
      CHECK(std::uint64_t(a) * mod_inverse(a, p) % p == 1);
}

TEST_CASE("PrimeContext") {
  const PrimeContext ctx(7);
  CHECK(ctx.prime() == 7);
  CHECK(ctx.nonresidue() == 3);
  CHECK(ctx.primitive_root() == 3);
  CHECK(ctx.reduce(-1) == 6);
  CHECK(ctx.reduce(15) == 1);
  CHECK(ctx.inv(3) == 5);
  CHECK(ctx.pow(3, 2) == 2);  // omega^2 = 9 = 2 mod 7
  CHECK_THROWS_AS(PrimeContext(9), std::invalid_argument);
}
