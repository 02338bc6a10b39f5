#include <sstream>

#include "p6cat/dsl.hpp"
#include "p6cat/errors.hpp"

namespace p6cat::dsl {

namespace {

constexpr std::int64_t kEvalLimit = std::int64_t{1} << 44;

std::int64_t checked(std::int64_t v) {
  if (v > kEvalLimit || v < -kEvalLimit)
    throw MalformedSpecError("expression value out of range");
  return v;
}

}  // namespace

std::int64_t eval_expr(const Expr& e, const EvalContext& ctx) {
  switch (e.kind) {
    case Expr::Kind::Int:
      return e.value;
    case Expr::Kind::P:
      return ctx.p;
    case Expr::Kind::Nu:
      return ctx.nu;
    case Expr::Kind::Omega:
      return ctx.omega;
    case Expr::Kind::Param: {
      if (ctx.params) {
        for (const auto& [name, val] : *ctx.params)
          if (name == e.name) return val;
      }
      throw MalformedSpecError("unbound parameter '" + e.name + "'");
    }
    case Expr::Kind::Add:
      return checked(eval_expr(*e.lhs, ctx) + eval_expr(*e.rhs, ctx));
    case Expr::Kind::Sub:
      return checked(eval_expr(*e.lhs, ctx) - eval_expr(*e.rhs, ctx));
    case Expr::Kind::Mul:
      return checked(eval_expr(*e.lhs, ctx) * eval_expr(*e.rhs, ctx));
    case Expr::Kind::Div: {
      const std::int64_t a = eval_expr(*e.lhs, ctx);
      const std::int64_t b = eval_expr(*e.rhs, ctx);
      if (b == 0) throw MalformedSpecError("division by zero in expression");
      if (a % b != 0)
        throw MalformedSpecError("inexact division in expression: " +
                                 std::to_string(a) + "/" + std::to_string(b));
      return a / b;
    }
    case Expr::Kind::Pow: {
      const std::int64_t base = eval_expr(*e.lhs, ctx);
      const std::int64_t ex = eval_expr(*e.rhs, ctx);
      if (ex < 0) throw MalformedSpecError("negative exponent in expression");
      std::int64_t acc = 1;
      for (std::int64_t i = 0; i < ex; ++i) acc = checked(acc * base);
      return acc;
    }
    case Expr::Kind::Neg:
      return checked(-eval_expr(*e.lhs, ctx));
  }
  throw std::logic_error("eval_expr: bad kind");
}

namespace {

int precedence(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
      return 2;
    case Expr::Kind::Neg:
      return 3;
    case Expr::Kind::Pow:
      return 4;
    default:
      return 5;
  }
}

void render(const Expr& e, std::ostream& os, int parent_prec) {
  const int prec = precedence(e.kind);
  const bool paren = prec < parent_prec;
  if (paren) os << "(";
  switch (e.kind) {
    case Expr::Kind::Int:
      os << e.value;
      break;
    case Expr::Kind::P:
      os << "p";
      break;
    case Expr::Kind::Nu:
      os << "nu";
      break;
    case Expr::Kind::Omega:
      os << "omega";
      break;
    case Expr::Kind::Param:
      os << e.name;
      break;
    case Expr::Kind::Add:
      render(*e.lhs, os, prec);
      os << " + ";
      render(*e.rhs, os, prec + 1);
      break;
    case Expr::Kind::Sub:
      render(*e.lhs, os, prec);
      os << " - ";
      render(*e.rhs, os, prec + 1);
      break;
    case Expr::Kind::Mul:
      render(*e.lhs, os, prec);
      os << "*";
      render(*e.rhs, os, prec + 1);
      break;
    case Expr::Kind::Div:
      render(*e.lhs, os, prec);
      os << "/";
      render(*e.rhs, os, prec + 1);
      break;
    case Expr::Kind::Neg:
      os << "-";
      render(*e.lhs, os, prec + 1);
      break;
    case Expr::Kind::Pow:
      render(*e.lhs, os, prec + 1);
      os << "^";
      render(*e.rhs, os, prec + 1);
      break;
  }
  if (paren) os << ")";
}

}  // namespace

std::string render_expr(const Expr& e) {
  std::ostringstream os;
  render(e, os, 0);
  return os.str();
}

const Residue* ParamBinding::find(const std::string& name) const {
  for (const auto& [n, v] : assignments)
    if (n == name) return &v;
  return nullptr;
}

std::string ParamBinding::suffix() const {
  std::ostringstream os;
  for (const auto& [n, v] : assignments) os << " " << n << "=" << v;
  return os.str();
}

std::vector<ParamBinding> expand(const FamilySpec& spec,
                                 const PrimeContext& ctx) {
  const EvalContext ec{ctx.prime(), ctx.nonresidue(), ctx.primitive_root(),
                       nullptr};

  std::vector<ParamBinding> bindings{ParamBinding{}};
  for (const ParamDecl& decl : spec.params) {
    const bool use_main =
        !decl.conditional ||
        static_cast<std::int64_t>(ctx.prime() % decl.mod) == decl.residue;
    const RangeSet& set = use_main ? decl.main_set : decl.else_set;

    std::string branch;
    if (decl.conditional)
      branch = "p mod " + std::to_string(decl.mod) +
               (use_main ? " == " : " != ") + std::to_string(decl.residue);

    std::vector<Residue> values;
    if (set.is_interval()) {
      const std::int64_t lo = eval_expr(*set.lo, ec);
      const std::int64_t hi = eval_expr(*set.hi, ec);
      for (std::int64_t v = lo; v <= hi; ++v) values.push_back(ctx.reduce(v));
    } else {
      for (const ExprPtr& item : set.items)
        values.push_back(ctx.reduce(eval_expr(*item, ec)));
    }

    std::vector<ParamBinding> next;
    next.reserve(bindings.size() * values.size());
    for (const ParamBinding& b : bindings) {
      for (const Residue v : values) {
        ParamBinding nb = b;
        nb.assignments.emplace_back(decl.name, v);
        if (!branch.empty()) {
          if (!nb.provenance.empty()) nb.provenance += "; ";
          nb.provenance += branch;
        }
        next.push_back(std::move(nb));
      }
    }
    bindings = std::move(next);
  }
  return bindings;
}

CasDialect parse_dialect(std::string_view name) {
  if (name == "gap-style") return CasDialect::GapStyle;
  if (name == "magma-style") return CasDialect::MagmaStyle;
  throw std::invalid_argument("unsupported dialect '" + std::string(name) +
                              "' (expected gap-style or magma-style)");
}

}  // namespace p6cat::dsl
