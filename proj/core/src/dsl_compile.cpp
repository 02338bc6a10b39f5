#include <algorithm>
#include <map>

#include "p6cat/dsl.hpp"
#include "p6cat/errors.hpp"

namespace p6cat::dsl {

namespace {

constexpr std::int64_t kMaxSubstitutedExponent = 100000;

// A relation word after parameter substitution: (source gen, exact exponent).
struct EvalFactor {
  GenRef gen;
  std::int64_t exp = 1;
};
using EvalWord = std::vector<EvalFactor>;

std::string gen_name(const GenRef& g) {
  return (g.beta ? "b" : "a") + std::to_string(g.index);
}

EvalWord eval_word(const WordExpr& w, const EvalContext& ec) {
  EvalWord out;
  out.reserve(w.size());
  for (const WordFactor& f : w) {
    EvalFactor ef;
    ef.gen = f.gen;
    ef.exp = f.exp ? eval_expr(*f.exp, ec) : 1;
    if (ef.exp != 0) out.push_back(ef);
  }
  return out;
}

// w^e as a letter sequence: e >= 0 repeats w, e < 0 repeats the free
// inverse (reversed, negated). Single-letter words scale exactly.
void append_word_power(EvalWord& out, const EvalWord& w, std::int64_t e) {
  if (e == 0 || w.empty()) return;
  if (w.size() == 1) {
    const std::int64_t scaled = w[0].exp * e;
    if (std::abs(scaled) > kMaxSubstitutedExponent)
      throw MalformedSpecError("substituted exponent too large");
    out.push_back({w[0].gen, scaled});
    return;
  }
  if (std::abs(e) > 64)
    throw MalformedSpecError("definition substitution exponent too large");
  if (e > 0) {
    for (std::int64_t k = 0; k < e; ++k)
      out.insert(out.end(), w.begin(), w.end());
  } else {
    EvalWord inv;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      inv.push_back({it->gen, -it->exp});
    for (std::int64_t k = 0; k < -e; ++k)
      out.insert(out.end(), inv.begin(), inv.end());
  }
}

}  // namespace

CompiledPresentation compile(const FamilySpec& spec, const ParamBinding& binding,
                             const PrimeContext& ctx, int expected_gen_count) {
  for (const ParamDecl& d : spec.params) {
    if (!binding.find(d.name))
      throw MalformedSpecError("compile: binding missing parameter '" + d.name +
                               "' for " + spec.label);
  }
  const EvalContext ec{ctx.prime(), ctx.nonresidue(), ctx.primitive_root(),
                       &binding.assignments};

  // Resolve definitions transitively; a cycle among definitions is an
  // error in the data.
  std::map<int, EvalWord> raw_defs;  // alpha index -> word
  for (const DefRel& d : spec.defs) raw_defs[d.gen.index] = eval_word(d.rhs, ec);

  std::map<int, EvalWord> resolved;
  std::map<int, int> state;  // 0 fresh, 1 in progress, 2 done
  auto resolve = [&](auto&& self, int alpha) -> const EvalWord& {
    if (state[alpha] == 2) return resolved[alpha];
    if (state[alpha] == 1)
      throw MalformedSpecError("compile: definition cycle through a" +
                               std::to_string(alpha) + " in " + spec.label);
    state[alpha] = 1;
    EvalWord out;
    for (const EvalFactor& f : raw_defs.at(alpha)) {
      if (!f.gen.beta && raw_defs.count(f.gen.index))
        append_word_power(out, self(self, f.gen.index), f.exp);
      else
        out.push_back(f);
    }
    state[alpha] = 2;
    resolved[alpha] = std::move(out);
    return resolved[alpha];
  };
  for (const auto& [alpha, w] : raw_defs) resolve(resolve, alpha);

  auto substitute = [&](const EvalWord& w) {
    EvalWord out;
    for (const EvalFactor& f : w) {
      if (!f.gen.beta && resolved.count(f.gen.index))
        append_word_power(out, resolved.at(f.gen.index), f.exp);
      else
        out.push_back(f);
    }
    return out;
  };

  // Survivors: betas first (their declared order is the series order),
  // then the non-defined alphas.
  std::vector<int> beta_pos(spec.beta_count, 0);
  std::vector<int> alpha_pos(spec.alpha_count, 0);
  int pos = 0;
  for (int b = 1; b <= spec.beta_count; ++b) beta_pos[b - 1] = ++pos;
  for (int a = 1; a <= spec.alpha_count; ++a)
    if (!resolved.count(a)) alpha_pos[a - 1] = ++pos;
  const int n = pos;
  if (n < 1 || n > kMaxGens)
    throw MalformedSpecError("compile: surviving generator count " +
                             std::to_string(n) + " outside [1, " +
                             std::to_string(kMaxGens) + "] in " + spec.label);
  if (expected_gen_count > 0 && n != expected_gen_count)
    throw MalformedSpecError(
        "compile: surviving generator count " + std::to_string(n) + " != " +
        std::to_string(expected_gen_count) + " in " + spec.label);

  auto position = [&](const GenRef& g) -> int {
    const int idx = g.beta ? beta_pos[g.index - 1] : alpha_pos[g.index - 1];
    if (idx == 0)
      throw std::logic_error("compile: eliminated generator survived");
    return idx;
  };

  // Gather relation words keyed by final pc position.
  std::vector<Word> pow_words(n + 1);
  std::vector<std::vector<std::pair<int, Word>>> comm_words(n + 1);

  auto to_word = [&](const EvalWord& w, int support_below,
                     const std::string& what) {
    Word out;
    for (const EvalFactor& f : w) {
      const int q = position(f.gen);
      if (q >= support_below)
        throw MalformedSpecError("compile: " + what + " touches " +
                                 gen_name(f.gen) +
                                 " which is not earlier in the series (" +
                                 spec.label + ")");
      out.push_back({q, f.exp});
    }
    return out;
  };

  for (const PowerRel& r : spec.powers) {
    const int q = position(r.gen);
    pow_words[q] = to_word(substitute(eval_word(r.rhs, ec)), q,
                           "power relation of " + gen_name(r.gen));
  }
  for (const CommRel& r : spec.comms) {
    int j = position(r.left);
    int i = position(r.right);
    EvalWord w = substitute(eval_word(r.rhs, ec));
    if (j < i) {
      // stored with the higher generator first; flip via the free inverse
      std::swap(j, i);
      EvalWord inv;
      for (auto it = w.rbegin(); it != w.rend(); ++it)
        inv.push_back({it->gen, -it->exp});
      w = std::move(inv);
    }
    comm_words[j].emplace_back(
        i, to_word(w, i,
                   "commutator [" + gen_name(r.left) + "," +
                       gen_name(r.right) + "]"));
  }

  // Build the presentation level by level: once all relations among
  // generators below q are in place, any word supported below q can be
  // collected to its normal form.
  PcPresentation pres(n, ctx.prime());
  for (int q = 1; q <= n; ++q) {
    pres.set_power(q, pres.collect(pow_words[q]));
    for (const auto& [i, w] : comm_words[q])
      pres.set_commutator(q, i, pres.collect(w));
  }

  CompiledPresentation out{std::move(pres), std::move(beta_pos),
                           std::move(alpha_pos)};
  return out;
}

}  // namespace p6cat::dsl
