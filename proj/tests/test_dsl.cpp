#include <doctest.h>

#include "p6cat/dsl.hpp"
#include "p6cat/pcgroup.hpp"

using namespace p6cat;
using namespace p6cat::dsl;

namespace {

const char* kHeisenberg = R"dsl(convention bracket=left-normed order=ji

family 2 label "(2,1)" rank 3 gens a1..a3 {
  pow a1^p = 1
  pow a2^p = 1
  pow a3^p = 1
  comm [a3,a2] = a1
}
)dsl";

FamilySpec parse_one(const std::string& text) {
  ParseResult pr = parse(text);
  REQUIRE_MESSAGE(pr.ok(), (pr.diagnostics.empty()
                                ? "no diagnostics"
                                : pr.diagnostics.front().message));
  REQUIRE(pr.specs.size() == 1);
  return pr.specs.front();
}

}  // namespace

TEST_CASE("parse the minimal abelian block") {
  // all relations omitted: trivial powers, trivial commutators
  ParseResult pr = parse("family 1 rank 1 gens a1..a6 { }\n");
  REQUIRE(pr.ok());
  REQUIRE(pr.specs.size() == 1);
  const FamilySpec& s = pr.specs.front();
  CHECK(s.family == 1);
  CHECK(s.rank == 1);
  CHECK(s.alpha_count == 6);
  CHECK(s.beta_count == 0);
  CHECK(s.powers.empty());
  CHECK(s.comms.empty());
  CHECK(s.defs.empty());
  CHECK(s.params.empty());
}

TEST_CASE("parse parameter declarations") {
  FamilySpec s = parse_one(
      "family 11 label \"(11,14r)\" rank 6 gens a1..a6 {\n"
      "  param r in {1, nu}\n"
      "}\n");
  REQUIRE(s.params.size() == 1);
  CHECK(s.params[0].name == "r");
  CHECK(!s.params[0].conditional);
  REQUIRE(s.params[0].main_set.items.size() == 2);

  FamilySpec c = parse_one(
      "family 16 label \"(16,12r)\" rank 6 gens a1..a6 {\n"
      "  param r in {1, omega, omega^2} when p mod 3 == 1 else {1}\n"
      "}\n");
  REQUIRE(c.params.size() == 1);
  CHECK(c.params[0].conditional);
  CHECK(c.params[0].mod == 3);
  CHECK(c.params[0].residue == 1);
  CHECK(c.params[0].main_set.items.size() == 3);
  CHECK(c.params[0].else_set.items.size() == 1);

  FamilySpec iv = parse_one(
      "family 21 label \"(21,7rs)\" rank 6 gens a1..a6 {\n"
      "  param r in {0 .. p-1}\n"
      "  param s in {1 .. (p-1)/2}\n"
      "}\n");
  REQUIRE(iv.params.size() == 2);
  CHECK(iv.params[0].main_set.is_interval());
  CHECK(iv.params[1].main_set.is_interval());
}

TEST_CASE("parse diagnostics carry line and column") {
  ParseResult pr = parse(
      "family 3 rank 2 gens a1..a4 {\n"
      "  comm [a4,a3] = a9\n"
      "}\n");
  REQUIRE(!pr.ok());
  CHECK(pr.diagnostics.front().loc.line == 2);
  CHECK(pr.diagnostics.front().loc.col > 1);
  CHECK(pr.diagnostics.front().message.find("a9") != std::string::npos);
}

TEST_CASE("parse rejects duplicate relations") {
  ParseResult pr = parse(
      "family 3 rank 2 gens a1..a4 {\n"
      "  pow a2^p = 1\n"
      "  pow a2^p = a1\n"
      "  comm [a4,a3] = a1\n"
      "  comm [a4,a3] = a2\n"
      "}\n");
  REQUIRE(pr.diagnostics.size() >= 2);
  CHECK(pr.diagnostics[0].message.find("duplicate power") != std::string::npos);
  CHECK(pr.diagnostics[1].message.find("duplicate commutator") !=
        std::string::npos);
}

TEST_CASE("parse rejects equal commutator indices and undeclared names") {
  ParseResult pr = parse(
      "family 3 rank 2 gens a1..a4 {\n"
      "  comm [a3,a3] = a1\n"
      "  pow a2^p = a1^r\n"
      "}\n");
  REQUIRE(pr.diagnostics.size() >= 2);
  CHECK(pr.diagnostics[0].message.find("equal indices") != std::string::npos);
  CHECK(pr.diagnostics[1].message.find("undeclared parameter") !=
        std::string::npos);
}

TEST_CASE("parse rejects commutators against the declared order") {
  ParseResult pr = parse(
      "convention bracket=left-normed order=ji\n"
      "family 3 rank 2 gens a1..a4 {\n"
      "  comm [a3,a4] = a1\n"
      "}\n");
  REQUIRE(!pr.ok());
  CHECK(pr.diagnostics.front().message.find("order convention") !=
        std::string::npos);
}

TEST_CASE("diagnostics are capped at 20") {
  std::string text = "family 3 rank 2 gens a1..a4 {\n";
  for (int k = 0; k < 30; ++k) text += "  pow a9^p = 1\n";
  text += "}\n";
  ParseResult pr = parse(text);
  CHECK(pr.diagnostics.size() == 20);
}

TEST_CASE("rank-6 blocks must use exactly a1..a6") {
  ParseResult pr = parse("family 12 rank 6 gens a1..a5, b1 { }\n");
  REQUIRE(!pr.ok());
  CHECK(pr.diagnostics.front().message.find("rank-6") != std::string::npos);
}

TEST_CASE("serialization round-trips and is deterministic") {
  ParseResult pr = parse(kHeisenberg);
  REQUIRE(pr.ok());
  const std::string once = serialize(pr.convention, pr.specs);
  ParseResult again = parse(once);
  REQUIRE(again.ok());
  const std::string twice = serialize(again.convention, again.specs);
  CHECK(once == twice);
  CHECK(once.back() == '\n');

  // conditional ranges and interval ranges survive the round trip
  const std::string cond =
      "family 18 label \"(18,9r)\" rank 6 gens a1..a6 {\n"
      "  param r in {1, omega, omega^2, omega^3} when p mod 4 == 1 else {1, "
      "nu}\n"
      "  param s in {0 .. p-1}\n"
      "  pow a6^p = a1^(r + 1) a2^nu\n"
      "  comm [a6,a5] = a4^s\n"
      "}\n";
  ParseResult c1 = parse(cond);
  REQUIRE(c1.ok());
  const std::string s1 = serialize(c1.convention, c1.specs);
  ParseResult c2 = parse(s1);
  REQUIRE(c2.ok());
  CHECK(serialize(c2.convention, c2.specs) == s1);
  REQUIRE(c2.specs[0].params.size() == 2);
  CHECK(c2.specs[0].params[0].conditional);
  CHECK(c2.specs[0].params[0].else_set.items.size() == 2);
}

TEST_CASE("expand parameter ranges") {
  const PrimeContext p7(7), p13(13);

  FamilySpec two = parse_one(
      "family 11 label \"(11,14r)\" rank 6 gens a1..a6 {\n"
      "  param r in {1, nu}\n"
      "}\n");
  auto b7 = expand(two, p7);
  REQUIRE(b7.size() == 2);
  CHECK(*b7[0].find("r") == 1);
  CHECK(*b7[1].find("r") == 3);  // nu(7) = 3, in declared order

  FamilySpec g3 = parse_one(
      "family 16 label \"(16,12r)\" rank 6 gens a1..a6 {\n"
      "  param r in {1, omega, omega^2} when p mod 3 == 1 else {1}\n"
      "}\n");
  CHECK(expand(g3, p7).size() == 3);   // 7 = 1 mod 3
  CHECK(expand(g3, p13).size() == 3);  // 13 = 1 mod 3
  CHECK(expand(g3, PrimeContext(11)).size() == 1);
  CHECK(expand(g3, p7)[1].provenance == "p mod 3 == 1");
  CHECK(expand(g3, PrimeContext(11))[0].provenance == "p mod 3 != 1");

  FamilySpec g4 = parse_one(
      "family 18 label \"(18,9r)\" rank 6 gens a1..a6 {\n"
      "  param r in {1, omega, omega^2, omega^3} when p mod 4 == 1 else {1, nu}\n"
      "}\n");
  CHECK(expand(g4, p7).size() == 2);   // 7 = 3 mod 4
  CHECK(expand(g4, p13).size() == 4);  // 13 = 1 mod 4

  FamilySpec rs = parse_one(
      "family 21 label \"(21,7rs)\" rank 6 gens a1..a6 {\n"
      "  param r in {0 .. p-1}\n"
      "  param s in {1 .. (p-1)/2}\n"
      "}\n");
  auto rs7 = expand(rs, p7);
  REQUIRE(rs7.size() == 21);  // 7 * 3
  // r outer, s inner: the second declared parameter varies fastest
  CHECK(*rs7[0].find("r") == 0);
  CHECK(*rs7[0].find("s") == 1);
  CHECK(*rs7[1].find("r") == 0);
  CHECK(*rs7[1].find("s") == 2);
  CHECK(*rs7[3].find("r") == 1);
  CHECK(*rs7[3].find("s") == 1);
  CHECK(expand(rs, p13).size() == 78);
  CHECK(rs7[0].suffix() == " r=0 s=1");
}

TEST_CASE("compile a rank-6 spec with no betas is the identity transform") {
  FamilySpec s = parse_one(
      "family 12 label \"(x)\" rank 6 gens a1..a6 {\n"
      "  pow a6^p = a1^8\n"
      "  comm [a6,a5] = a2\n"
      "}\n");
  const PrimeContext ctx(7);
  CompiledPresentation cp = compile(s, ParamBinding{}, ctx, 6);
  CHECK(cp.pres.gen_count() == 6);
  CHECK(cp.pres.power_rhs(6).e[1] == 1);  // 8 reduced mod 7
  CHECK(cp.pres.commutator_rhs(6, 5).e[2] == 1);
  CHECK(cp.alpha_positions ==
        std::vector<int>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("compile eliminates defined alphas and orders betas first") {
  // a6 is defined as b1^2; b1 joins the polycyclic sequence at position 1
  FamilySpec s = parse_one(
      "family 4 label \"(y)\" rank 4 gens a1..a6, b1 {\n"
      "  def a6 = b1^2\n"
      "  pow a5^p = a6\n"
      "  comm [a5,a4] = a6\n"
      "}\n");
  const PrimeContext ctx(7);
  CompiledPresentation cp = compile(s, ParamBinding{}, ctx);
  CHECK(cp.pres.gen_count() == 6);
  CHECK(cp.beta_positions == std::vector<int>{1});
  CHECK(cp.alpha_positions == std::vector<int>{2, 3, 4, 5, 6, 0});
  // a5 sits at position 6, a4 at 5; the rewritten rhs is b1^2 at position 1
  CHECK(cp.pres.power_rhs(6).e[1] == 2);
  CHECK(cp.pres.commutator_rhs(6, 5).e[1] == 2);
}

TEST_CASE("compile resolves omega powers") {
  FamilySpec s = parse_one(
      "family 12 label \"(w)\" rank 6 gens a1..a6 {\n"
      "  pow a6^p = a1^(omega^2)\n"
      "}\n");
  CompiledPresentation cp = compile(s, ParamBinding{}, PrimeContext(7), 6);
  // omega(7) = 3, omega^2 = 9 = 2 mod 7
  CHECK(cp.pres.power_rhs(6).e[1] == 2);
}

TEST_CASE("compile substitutes parameters") {
  FamilySpec s = parse_one(
      "family 12 label \"(r)\" rank 6 gens a1..a6 {\n"
      "  param r in {0 .. p-1}\n"
      "  pow a6^p = a1^(r + 1)\n"
      "}\n");
  const PrimeContext ctx(7);
  auto bindings = expand(s, ctx);
  REQUIRE(bindings.size() == 7);
  for (std::size_t k = 0; k < bindings.size(); ++k) {
    CompiledPresentation cp = compile(s, bindings[k], ctx, 6);
    CHECK(cp.pres.power_rhs(6).e[1] == (k + 1) % 7);
  }
  CHECK_THROWS_AS(compile(s, ParamBinding{}, ctx, 6), MalformedSpecError);
}

TEST_CASE("compile rejects definition cycles") {
  FamilySpec s = parse_one(
      "family 4 rank 4 gens a1..a6, b1 {\n"
      "  def a6 = a5\n"
      "  def a5 = a6 b1\n"
      "}\n");
  CHECK_THROWS_AS(compile(s, ParamBinding{}, PrimeContext(7)),
                  MalformedSpecError);
}

TEST_CASE("compile enforces the expected generator count") {
  FamilySpec s = parse_one("family 4 rank 3 gens a1..a3 { }\n");
  CHECK_THROWS_AS(compile(s, ParamBinding{}, PrimeContext(7), 6),
                  MalformedSpecError);
  CHECK(compile(s, ParamBinding{}, PrimeContext(7)).pres.gen_count() == 3);
}

TEST_CASE("compile rejects support violations") {
  // commutator value must sit strictly below the smaller key generator
  FamilySpec s = parse_one(
      "family 12 rank 6 gens a1..a6 {\n"
      "  comm [a6,a5] = a5\n"
      "}\n");
  CHECK_THROWS_AS(compile(s, ParamBinding{}, PrimeContext(7), 6),
                  MalformedSpecError);
}

TEST_CASE("compiled Heisenberg block is the Heisenberg engine") {
  ParseResult pr = parse(kHeisenberg);
  REQUIRE(pr.ok());
  CompiledPresentation cp =
      compile(pr.specs[0], ParamBinding{}, PrimeContext(5));
  PcGroup g(cp.pres, PrimeContext(5));
  CHECK(g.consistency_check().consistent);
  CHECK(g.order() == 125);
  ExponentVector expect;
  expect.e[1] = 1;
  CHECK(g.commutator(g.generator(3), g.generator(2)) == expect);
}

TEST_CASE("commutators written in ij order compile via inversion") {
  ParseResult pr = parse(
      "convention bracket=left-normed order=ij\n"
      "family 2 label \"(2,1)\" rank 3 gens a1..a3 {\n"
      "  comm [a2,a3] = a1\n"
      "}\n");
  REQUIRE(pr.ok());
  CompiledPresentation cp =
      compile(pr.specs[0], ParamBinding{}, PrimeContext(5));
  // [a2,a3] = a1 means [a3,a2] = a1^-1 = a1^4
  CHECK(cp.pres.commutator_rhs(3, 2).e[1] == 4);
}

TEST_CASE("emit gap-style scripts") {
  FamilySpec s = parse_one("family 1 label \"(1,1)\" rank 1 gens a1..a6 { }\n");
  const std::string script =
      emit_cas(s, ParamBinding{}, PrimeContext(7), CasDialect::GapStyle);
  // six power relators, no commutator relators for the abelian presentation
  CHECK(script.find("FreeGroup(6)") != std::string::npos);
  CHECK(script.find("Comm(") == std::string::npos);
  CHECK(script.find("g[6]^7") != std::string::npos);
  CHECK(script.find("PcGroupFpGroup") != std::string::npos);
  CHECK(script.back() == '\n');
  CHECK(script.substr(0, 1) == "#");
}

TEST_CASE("emit magma-style scripts") {
  ParseResult pr = parse(kHeisenberg);
  REQUIRE(pr.ok());
  const std::string script = emit_cas(pr.specs[0], ParamBinding{},
                                      PrimeContext(5), CasDialect::MagmaStyle);
  CHECK(script.find("(a3, a2) = a1") != std::string::npos);
  CHECK(script.find("a1^5 = 1") != std::string::npos);
  CHECK(script.substr(0, 2) == "//");
  CHECK(script.back() == '\n');
}

TEST_CASE("emission is deterministic") {
  ParseResult pr = parse(kHeisenberg);
  REQUIRE(pr.ok());
  const std::string a = emit_cas(pr.specs[0], ParamBinding{}, PrimeContext(5),
                                 CasDialect::GapStyle);
  const std::string b = emit_cas(pr.specs[0], ParamBinding{}, PrimeContext(5),
                                 CasDialect::GapStyle);
  CHECK(a == b);
  CHECK_THROWS_AS(parse_dialect("maple-style"), std::invalid_argument);
}
