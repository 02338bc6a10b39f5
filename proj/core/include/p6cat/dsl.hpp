#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "p6cat/numtheory.hpp"
#include "p6cat/pc.hpp"

namespace p6cat::dsl {

struct SourceLoc {
  int line = 0;
  int col = 0;
};

struct Diagnostic {
  SourceLoc loc;
  std::string message;
};

// Integer expressions over literals, p, nu, omega and declared parameters.
// Evaluation is exact 64-bit arithmetic with exact division; reduction mod
// p happens where the value is used.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Int, P, Nu, Omega, Param, Add, Sub, Mul, Div, Pow, Neg };
  Kind kind = Kind::Int;
  std::int64_t value = 0;  // Int
  std::string name;        // Param
  ExprPtr lhs, rhs;
};

struct EvalContext {
  Residue p = 0;
  Residue nu = 0;
  Residue omega = 0;
  const std::vector<std::pair<std::string, Residue>>* params = nullptr;
};
std::int64_t eval_expr(const Expr& e, const EvalContext& ctx);
std::string render_expr(const Expr& e);

// Generator reference: alpha (a3) or beta (b2), 1-based.
struct GenRef {
  bool beta = false;
  int index = 0;
  friend bool operator==(const GenRef&, const GenRef&) = default;
};

struct WordFactor {
  GenRef gen;
  ExprPtr exp;  // null means exponent 1
};
using WordExpr = std::vector<WordFactor>;

// A parameter range: an explicit value list or an integer interval, with
// an optional residue-class condition on p selecting between two sets.
struct RangeSet {
  std::vector<ExprPtr> items;
  ExprPtr lo, hi;
  bool is_interval() const { return lo != nullptr; }
};

struct ParamDecl {
  std::string name;
  RangeSet main_set;
  bool conditional = false;
  std::int64_t mod = 0;
  std::int64_t residue = 0;
  RangeSet else_set;
  SourceLoc loc;
};

struct PowerRel {
  GenRef gen;
  WordExpr rhs;
  SourceLoc loc;
};
struct CommRel {
  GenRef left, right;  // [left, right] as written
  WordExpr rhs;
  SourceLoc loc;
};
struct DefRel {
  GenRef gen;  // always an alpha
  WordExpr rhs;
  SourceLoc loc;
};

// One parametrized presentation (one table row). Rank-6 rows use exactly
// a1..a6; rank <= 5 rows may add betas (the centre's generating set) and
// definition relations expressing central alphas as beta words.
struct FamilySpec {
  int family = 0;
  std::string label;
  int rank = 0;
  int alpha_count = 0;
  int beta_count = 0;
  std::vector<ParamDecl> params;
  std::vector<PowerRel> powers;
  std::vector<CommRel> comms;
  std::vector<DefRel> defs;
  SourceLoc loc;
};

enum class BracketOrder { JI, IJ };

// File-level header recording the commutator orientation used by the
// transcription, so data files are self-describing.
struct Convention {
  std::string bracket = "left-normed";
  BracketOrder order = BracketOrder::JI;
};

struct ParseResult {
  Convention convention;
  std::vector<FamilySpec> specs;
  std::vector<Diagnostic> diagnostics;  // capped at 20
  bool ok() const { return diagnostics.empty(); }
};

ParseResult parse(std::string_view text);

// Canonical rendering; parse(serialize(x)) is structurally equal to x.
std::string serialize(const FamilySpec& spec);
std::string serialize(const Convention& conv,
                      const std::vector<FamilySpec>& specs);

// A complete assignment of the spec's parameters for a given prime, plus
// which branch of any residue-class condition applied.
struct ParamBinding {
  std::vector<std::pair<std::string, Residue>> assignments;
  std::string provenance;

  const Residue* find(const std::string& name) const;
  // " r=2 s=1" (empty for parameter-free rows)
  std::string suffix() const;
};

// The ordered list of admissible bindings for ctx's prime: declared range
// order, cartesian product with the last declared parameter varying
// fastest.
std::vector<ParamBinding> expand(const FamilySpec& spec,
                                 const PrimeContext& ctx);

struct CompiledPresentation {
  PcPresentation pres;
  std::vector<int> beta_positions;   // source beta i -> pc index
  std::vector<int> alpha_positions;  // source alpha i -> pc index, 0 if eliminated
};

// Substitutes the binding, eliminates defined alphas, orders the survivors
// along the composition series (betas first), normalizes every RHS and
// validates the central-series support conditions. expected_gen_count > 0
// enforces the surviving generator count (catalog rows require 6).
CompiledPresentation compile(const FamilySpec& spec, const ParamBinding& binding,
                             const PrimeContext& ctx,
                             int expected_gen_count = 0);

enum class CasDialect { GapStyle, MagmaStyle };
CasDialect parse_dialect(std::string_view name);  // "gap-style" / "magma-style"

// Self-contained construction script for one compiled entry. Output is
// byte-stable for fixed input and ends with a single trailing newline.
std::string emit_cas(const PcPresentation& pres, const std::string& family_label,
                     const ParamBinding& binding, CasDialect dialect);
std::string emit_cas(const FamilySpec& spec, const ParamBinding& binding,
                     const PrimeContext& ctx, CasDialect dialect);

}  // namespace p6cat::dsl
