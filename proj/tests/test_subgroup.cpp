#include <doctest.h>

#include <random>
#include <set>

#include "p6cat/subgroup.hpp"
#include "support/oracles.hpp"

using namespace p6cat;
using namespace p6cat::testing;

namespace {

std::set<std::size_t> as_index_set(const BruteGroup& bg,
                                   const std::vector<ExponentVector>& elems) {
  std::set<std::size_t> out;
  for (const ExponentVector& v : elems) out.insert(bg.index(v));
  return out;
}

}  // namespace

TEST_CASE("closure of nothing is the trivial subgroup") {
  PcGroup g = heisenberg_group();
  Subgroup h = Subgroup::closure(g, {});
  CHECK(h.order() == 1);
  CHECK(h.order_log() == 0);
  CHECK(h.contains(g.identity()));
  CHECK(!h.contains(g.generator(1)));
}

TEST_CASE("closure of all generators is the whole group") {
  PcGroup g = heisenberg_group();
  Subgroup h = Subgroup::whole(g);
  CHECK(h.order() == g.order());
  for (const ExponentVector& x : g.elements()) CHECK(h.contains(x));
}

TEST_CASE("closure of the Heisenberg centre generator") {
  PcGroup g = heisenberg_group();
  const ExponentVector a1 = g.generator(1);
  Subgroup h = Subgroup::closure(g, std::vector<ExponentVector>{a1});
  CHECK(h.order() == 5);
  // brute-force set closure agrees
  BruteGroup bg(g);
  const auto brute = bg.closure({bg.index(a1)});
  CHECK(brute.size() == 5);
  CHECK(as_index_set(bg, h.elements()) == brute);
}

TEST_CASE("igs members are normalized and echelon-ordered") {
  PcGroup g = heisenberg_group();
  std::vector<ExponentVector> seeds = {g.collect({{3, 2}, {1, 4}}),
                                       g.collect({{2, 3}})};
  Subgroup h = Subgroup::closure(g, seeds);
  int last_pivot = 0;
  for (const ExponentVector& u : h.igs()) {
    const int piv = u.pivot();
    CHECK(piv > last_pivot);
    last_pivot = piv;
    CHECK(u.e[piv] == 1);
    CHECK(h.contains(u));
  }
  CHECK(h.contains(g.identity()));
}

TEST_CASE("subgroup closure matches brute-force set closure") {
  std::mt19937_64 rng(101);
  for (PcGroup& g : random_consistent_groups(10, 5, 4)) {
    BruteGroup bg(g);
    const auto elems = g.elements();
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<ExponentVector> seeds;
      std::set<std::size_t> seed_idx;
      const int k = 1 + int(rng() % 3);
      for (int s = 0; s < k; ++s) {
        const auto& v = elems[rng() % elems.size()];
        seeds.push_back(v);
        seed_idx.insert(bg.index(v));
      }
      Subgroup h = Subgroup::closure(g, seeds);
      const auto brute = bg.closure(seed_idx);
      REQUIRE(h.order() == brute.size());
      REQUIRE(as_index_set(bg, h.elements()) == brute);
      // membership by sifting agrees pointwise
      for (const ExponentVector& x : elems)
        REQUIRE(h.contains(x) == (brute.count(bg.index(x)) != 0));
    }
  }
}

TEST_CASE("normal closure matches brute-force conjugate closure") {
  std::mt19937_64 rng(202);
  for (PcGroup& g : random_consistent_groups(6, 5, 4)) {
    BruteGroup bg(g);
    const auto elems = g.elements();
    for (int trial = 0; trial < 3; ++trial) {
      const ExponentVector seed = elems[rng() % elems.size()];
      Subgroup h =
          Subgroup::normal_closure(g, std::vector<ExponentVector>{seed});
      // the subgroup generated by all conjugates of the seed
      std::set<std::size_t> conjugates;
      const std::size_t s = bg.index(seed);
      for (std::size_t x = 0; x < bg.size(); ++x)
        conjugates.insert(bg.mul(bg.mul(bg.inv(x), s), x));
      const auto brute = bg.closure(conjugates);
      REQUIRE(h.order() == brute.size());
      REQUIRE(as_index_set(bg, h.elements()) == brute);
    }
  }
}

TEST_CASE("subgroup containment and equality") {
  PcGroup g = heisenberg_group();
  Subgroup z = Subgroup::closure(g, std::vector<ExponentVector>{g.generator(1)});
  Subgroup whole = Subgroup::whole(g);
  CHECK(whole.contains(z));
  CHECK(!z.contains(whole));
  CHECK(z.same_as(z));
  CHECK(!z.same_as(whole));
}
