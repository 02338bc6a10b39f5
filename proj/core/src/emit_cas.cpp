#include <sstream>

#include "p6cat/dsl.hpp"

namespace p6cat::dsl {

namespace {

std::string gap_word(const ExponentVector& v, int n) {
  std::ostringstream os;
  bool first = true;
  for (int i = 1; i <= n; ++i) {
    if (v.e[i] == 0) continue;
    if (!first) os << "*";
    first = false;
    os << "g[" << i << "]";
    if (v.e[i] != 1) os << "^" << int(v.e[i]);
  }
  return os.str();
}

std::string magma_word(const ExponentVector& v, int n) {
  std::ostringstream os;
  bool first = true;
  for (int i = 1; i <= n; ++i) {
    if (v.e[i] == 0) continue;
    if (!first) os << "*";
    first = false;
    os << "a" << i;
    if (v.e[i] != 1) os << "^" << int(v.e[i]);
  }
  return os.str();
}

}  // namespace

std::string emit_cas(const PcPresentation& pres, const std::string& family_label,
                     const ParamBinding& binding, CasDialect dialect) {
  const int n = pres.gen_count();
  const Residue p = pres.prime();
  std::ostringstream os;

  if (dialect == CasDialect::GapStyle) {
    os << "# " << family_label << "  p=" << p << binding.suffix() << "\n";
    os << "F := FreeGroup(" << n << ");\n";
    os << "g := GeneratorsOfGroup(F);\n";
    os << "rels := [\n";
    bool first = true;
    for (int i = 1; i <= n; ++i) {
      const ExponentVector& w = pres.power_rhs(i);
      if (!first) os << ",\n";
      first = false;
      os << "  g[" << i << "]^" << p;
      if (!w.is_identity()) os << " / (" << gap_word(w, n) << ")";
    }
    for (int j = 2; j <= n; ++j) {
      for (int i = 1; i < j; ++i) {
        if (pres.commutator_trivial(j, i)) continue;
        os << ",\n  Comm(g[" << j << "], g[" << i << "]) / ("
           << gap_word(pres.commutator_rhs(j, i), n) << ")";
      }
    }
    os << "\n];\n";
    os << "G := PcGroupFpGroup(F / rels);\n";
  } else {
    os << "// " << family_label << "  p=" << p << binding.suffix() << "\n";
    os << "G<";
    for (int i = 1; i <= n; ++i) os << (i > 1 ? "," : "") << "a" << i;
    os << "> := Group<\n  ";
    for (int i = 1; i <= n; ++i) os << (i > 1 ? "," : "") << "a" << i;
    os << " |\n";
    bool first = true;
    for (int i = 1; i <= n; ++i) {
      const ExponentVector& w = pres.power_rhs(i);
      if (!first) os << ",\n";
      first = false;
      os << "  a" << i << "^" << p << " = "
         << (w.is_identity() ? std::string("1") : magma_word(w, n));
    }
    for (int j = 2; j <= n; ++j) {
      for (int i = 1; i < j; ++i) {
        if (pres.commutator_trivial(j, i)) continue;
        os << ",\n  (a" << j << ", a" << i << ") = "
           << magma_word(pres.commutator_rhs(j, i), n);
      }
    }
    os << "\n>;\n";
  }
  return os.str();
}

std::string emit_cas(const FamilySpec& spec, const ParamBinding& binding,
                     const PrimeContext& ctx, CasDialect dialect) {
  const CompiledPresentation cp = compile(spec, binding, ctx);
  const std::string label =
      spec.label.empty() ? "family " + std::to_string(spec.family) : spec.label;
  return emit_cas(cp.pres, label, binding, dialect);
}

}  // namespace p6cat::dsl
