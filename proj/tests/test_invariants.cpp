#include <doctest.h>

#include <set>

#include "p6cat/invariants.hpp"
#include "support/oracles.hpp"

using namespace p6cat;
using namespace p6cat::testing;

namespace {

PcGroup abelian_of_type(Residue p, const std::vector<int>& type) {
  // one generator chain per part, most central generators first
  int n = 0;
  for (int part : type) n += part;
  PcPresentation pres(n, p);
  int base = 0;
  for (int part : type) {
    for (int k = 2; k <= part; ++k) {
      ExponentVector w;
      w.e[base + k - 1] = 1;
      pres.set_power(base + k, w);
    }
    base += part;
  }
  PcGroup g(std::move(pres), PrimeContext(p));
  g.consistency_check();
  return g;
}

std::set<std::size_t> as_index_set(const BruteGroup& bg,
                                   const std::vector<ExponentVector>& elems) {
  std::set<std::size_t> out;
  for (const ExponentVector& v : elems) out.insert(bg.index(v));
  return out;
}

std::vector<std::size_t> subgroup_orders(const std::vector<Subgroup>& s) {
  std::vector<std::size_t> out;
  for (const Subgroup& h : s) out.push_back(h.order());
  return out;
}

}  // namespace

TEST_CASE("order type rendering") {
  CHECK(order_type_from_w({6}).rendered == "1^6");
  CHECK(order_type_from_w({1, 1, 1, 1, 1, 1}).rendered == "6");
  CHECK(order_type_from_w({2, 2, 2}).rendered == "3^2");
  CHECK(order_type_from_w({3, 2, 1}).rendered == "321");
  CHECK(order_type_from_w({2, 2, 1, 1}).m == std::vector<int>{4, 2});
  CHECK(order_type_from_w({4, 2}).m == std::vector<int>{2, 2, 1, 1});
  CHECK(order_type_from_w({4, 2}).rendered == "2^21^2");
}

TEST_CASE("centre: abelian groups are their own centre") {
  PcGroup g = abelian_of_type(5, {1, 1, 1, 1});
  InvariantEngine eng(g);
  CHECK(eng.center().order() == g.order());
}

TEST_CASE("centre of the Heisenberg model") {
  PcGroup g = heisenberg_group();
  InvariantEngine eng(g);
  Subgroup z = eng.center();
  CHECK(z.order() == 5);
  CHECK(z.contains(g.generator(1)));
  BruteGroup bg(g);
  CHECK(as_index_set(bg, z.elements()) == bg.centre());
}

TEST_CASE("derived subgroup examples") {
  PcGroup a = abelian_of_type(5, {2, 2});
  CHECK(derived_subgroup(a).order() == 1);

  PcGroup g = heisenberg_group();
  Subgroup d = derived_subgroup(g);
  CHECK(d.order() == 5);
  CHECK(d.contains(g.generator(1)));
  InvariantEngine eng(g);
  CHECK(eng.derived().same_as(d));
}

TEST_CASE("central series of the Heisenberg model") {
  PcGroup g = heisenberg_group();
  InvariantEngine eng(g);
  CHECK(subgroup_orders(eng.lower_central_series()) ==
        std::vector<std::size_t>{125, 5, 1});
  CHECK(subgroup_orders(eng.upper_central_series()) ==
        std::vector<std::size_t>{1, 5, 125});
  CHECK(subgroup_orders(lower_central_series(g)) ==
        std::vector<std::size_t>{125, 5, 1});
  CHECK(nilpotency_class(g) == 2);
}

TEST_CASE("central series of abelian groups") {
  PcGroup g = abelian_of_type(5, {2, 1});
  InvariantEngine eng(g);
  CHECK(subgroup_orders(eng.lower_central_series()) ==
        std::vector<std::size_t>{125, 1});
  CHECK(subgroup_orders(eng.upper_central_series()) ==
        std::vector<std::size_t>{1, 125});
  CHECK(nilpotency_class(g) == 1);
}

TEST_CASE("agemo examples") {
  // agemo(0) is the whole group
  PcGroup h = heisenberg_group();
  InvariantEngine ehg(h);
  CHECK(ehg.agemo(0).order() == 125);
  // exponent-p group: agemo(1) trivial
  CHECK(ehg.agemo(1).order() == 1);
  // cyclic p^6: agemo(1) has order p^5
  PcGroup c = abelian_of_type(5, {6});
  InvariantEngine ec(c);
  CHECK(ec.agemo(1).order() == 5 * 5 * 5 * 5 * 5);
  CHECK(ec.agemo(5).order() == 5);
  CHECK(ec.agemo(6).order() == 1);
}

TEST_CASE("order types of abelian groups realize their type partition") {
  CHECK(InvariantEngine(abelian_of_type(5, {1, 1, 1, 1, 1, 1})).order_type().rendered ==
        "1^6");
  CHECK(InvariantEngine(abelian_of_type(5, {6})).order_type().rendered == "6");
  CHECK(InvariantEngine(abelian_of_type(5, {3, 3})).order_type().rendered ==
        "3^2");
  CHECK(InvariantEngine(abelian_of_type(5, {3, 2, 1})).order_type().rendered ==
        "321");
}

TEST_CASE("conjugacy classes of the Heisenberg model") {
  PcGroup g = heisenberg_group();
  InvariantEngine eng(g);
  const auto sizes = eng.conjugacy_class_sizes();
  // 5 central classes of size 1 plus 24 classes of size 5
  REQUIRE(sizes.size() == 2);
  CHECK(sizes.at(1) == 5);
  CHECK(sizes.at(5) == 24);
  BruteGroup bg(g);
  const auto brute = bg.class_sizes();
  CHECK(std::map<std::uint64_t, std::uint64_t>(brute.begin(), brute.end()) ==
        sizes);
}

TEST_CASE("profile of elementary abelian and cyclic groups") {
  PcGroup e = abelian_of_type(5, {1, 1, 1, 1, 1, 1});
  InvariantProfile pe = InvariantEngine(e).profile();
  CHECK(pe.order_type.rendered == "1^6");
  CHECK(pe.centre_order_log == 6);
  CHECK(pe.derived_order_log == 0);
  CHECK(pe.nilpotency_class == 1);
  CHECK(pe.class_count == e.order());
  CHECK(pe.class_size_multiset.at(1) == e.order());
  CHECK(pe.exponent_log == 1);
  CHECK(pe.frattini_quotient_rank == 6);
  CHECK(pe.abelian_invariants == std::vector<int>{1, 1, 1, 1, 1, 1});

  PcGroup c = abelian_of_type(5, {6});
  InvariantProfile pc = InvariantEngine(c).profile();
  CHECK(pc.order_type.rendered == "6");
  CHECK(pc.centre_order_log == 6);
  CHECK(pc.derived_order_log == 0);
  CHECK(pc.nilpotency_class == 1);
  CHECK(pc.exponent_log == 6);
  CHECK(pc.frattini_quotient_rank == 1);
  CHECK(pc.abelian_invariants == std::vector<int>{6});
}

TEST_CASE("profile of the Heisenberg model") {
  PcGroup g = heisenberg_group();
  InvariantProfile pr = InvariantEngine(g).profile();
  CHECK(pr.centre_order_log == 1);
  CHECK(pr.derived_order_log == 1);
  CHECK(pr.nilpotency_class == 2);
  CHECK(pr.class_count == 29);
  CHECK(pr.exponent_log == 1);
  CHECK(pr.abelian_invariants == std::vector<int>{1, 1});
  CHECK(pr.lcs_order_logs == std::vector<int>{3, 1, 0});
  CHECK(pr.ucs_order_logs == std::vector<int>{0, 1, 3});
  CHECK(pr.to_json().find("\"nilpotency_class\":2") != std::string::npos);
}

TEST_CASE("invariants agree with brute-force oracles on random groups") {
  for (PcGroup& g : random_consistent_groups(10, 5, 4)) {
    BruteGroup bg(g);
    InvariantEngine eng(g);

    CHECK(as_index_set(bg, eng.center().elements()) == bg.centre());
    CHECK(as_index_set(bg, eng.derived().elements()) == bg.derived());
    CHECK(as_index_set(bg, derived_subgroup(g).elements()) == bg.derived());

    const auto lcs = eng.lower_central_series();
    const auto brute_lcs = bg.lower_central_series();
    REQUIRE(lcs.size() == brute_lcs.size());
    for (std::size_t k = 0; k < lcs.size(); ++k)
      CHECK(as_index_set(bg, lcs[k].elements()) == brute_lcs[k]);

    const auto igs_lcs = lower_central_series(g);
    REQUIRE(igs_lcs.size() == brute_lcs.size());
    for (std::size_t k = 0; k < igs_lcs.size(); ++k)
      CHECK(as_index_set(bg, igs_lcs[k].elements()) == brute_lcs[k]);

    const auto ucs = eng.upper_central_series();
    const auto brute_ucs = bg.upper_central_series();
    REQUIRE(ucs.size() == brute_ucs.size());
    for (std::size_t k = 0; k < ucs.size(); ++k)
      CHECK(as_index_set(bg, ucs[k].elements()) == brute_ucs[k]);

    for (int i = 0; i <= 3; ++i)
      CHECK(as_index_set(bg, eng.agemo(i).elements()) == bg.agemo(i, 5));

    const auto sizes = eng.conjugacy_class_sizes();
    const auto brute_sizes = bg.class_sizes();
    CHECK(std::map<std::uint64_t, std::uint64_t>(brute_sizes.begin(),
                                                 brute_sizes.end()) == sizes);

    // class-equation sanity and centre linkage
    std::uint64_t sum = 0;
    for (const auto& [size, count] : sizes) sum += size * count;
    CHECK(sum == g.order());
    CHECK(sizes.count(1));
    CHECK(sizes.at(1) == bg.centre().size());
  }
}

TEST_CASE("exponent equals the agemo chain length") {
  for (PcGroup& g : random_consistent_groups(6, 5, 4)) {
    InvariantEngine eng(g);
    const OrderType ot = eng.order_type();
    int nonzero = 0;
    for (int w : ot.w)
      if (w > 0) ++nonzero;
    CHECK(eng.exponent_log() == nonzero);
    // and matches the collection-level element orders
    std::uint64_t exp = 1;
    for (const ExponentVector& x : g.elements())
      exp = std::max(exp, g.element_order(x));
    std::uint64_t table_exp = 1;
    for (int k = 0; k < eng.exponent_log(); ++k) table_exp *= 5;
    CHECK(exp == table_exp);
  }
}

TEST_CASE("series lengths are consistent both ways") {
  for (PcGroup& g : random_consistent_groups(6, 5, 4)) {
    InvariantEngine eng(g);
    const auto lcs = eng.lower_central_series();
    const auto ucs = eng.upper_central_series();
    CHECK(lcs.size() == ucs.size());
    // strict monotonicity until the ends
    for (std::size_t k = 1; k < lcs.size(); ++k)
      CHECK(lcs[k].order_log() < lcs[k - 1].order_log());
    for (std::size_t k = 1; k < ucs.size(); ++k)
      CHECK(ucs[k].order_log() > ucs[k - 1].order_log());
    CHECK(lcs[1].same_as(eng.derived()));
  }
}

TEST_CASE("element table basics") {
  PcGroup g = heisenberg_group();
  ElementTable tab(g);
  CHECK(tab.size() == 125);
  // table operations agree with collection
  for (const ExponentVector& x : g.elements()) {
    const std::uint32_t c = tab.encode(x);
    for (int i = 1; i <= 3; ++i) {
      CHECK(tab.decode(tab.right(c, i)) == g.multiply(x, g.generator(i)));
      CHECK(tab.decode(tab.conj(c, i)) ==
            g.conjugate(x, g.generator(i)));
      CHECK(tab.decode(tab.comm(c, i)) ==
            g.commutator(x, g.generator(i)));
    }
    CHECK(tab.decode(tab.inv(c)) == g.inverse(x));
    CHECK(tab.decode(tab.pow_p(c)) == g.power(x, 5));
    CHECK(tab.element_order(c) == g.element_order(x));
  }
  CHECK_THROWS_AS(ElementTable(g, 10), BudgetExceededError);
}
