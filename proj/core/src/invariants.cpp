#include "p6cat/invariants.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace p6cat {

OrderType order_type_from_w(const std::vector<int>& w) {
  OrderType ot;
  ot.w = w;
  const int maxw = w.empty() ? 0 : *std::max_element(w.begin(), w.end());
  for (int j = 1; j <= maxw; ++j) {
    int m = 0;
    for (int wi : w)
      if (wi >= j) ++m;
    ot.m.push_back(m);
  }
  std::ostringstream os;
  for (std::size_t k = 0; k < ot.m.size();) {
    std::size_t run = k + 1;
    while (run < ot.m.size() && ot.m[run] == ot.m[k]) ++run;
    os << ot.m[k];
    if (run - k > 1) os << "^" << (run - k);
    k = run;
  }
  ot.rendered = os.str();
  return ot;
}

namespace {

std::string join_ints(const std::vector<int>& v, char sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v[i];
  }
  return os.str();
}

}  // namespace

std::string InvariantProfile::to_line() const {
  std::ostringstream os;
  os << "ot=" << order_type.rendered << " zlog=" << centre_order_log
     << " dlog=" << derived_order_log << " frk=" << frattini_quotient_rank
     << " lcs=" << join_ints(lcs_order_logs, ',')
     << " ucs=" << join_ints(ucs_order_logs, ',') << " cls=" << class_count
     << " exp=" << exponent_log << " ab=" << join_ints(abelian_invariants, '+')
     << " nc=" << nilpotency_class;
  return os.str();
}

std::string InvariantProfile::to_json() const {
  nlohmann::json j;
  j["order_type"] = order_type.rendered;
  j["order_type_w"] = order_type.w;
  j["centre_order"] = centre_order_log;
  j["derived_order"] = derived_order_log;
  j["frattini_quotient_rank"] = frattini_quotient_rank;
  j["lcs_orders"] = lcs_order_logs;
  j["ucs_orders"] = ucs_order_logs;
  nlohmann::json cs = nlohmann::json::object();
  for (const auto& [size, count] : class_size_multiset)
    cs[std::to_string(size)] = count;
  j["class_size_multiset"] = cs;
  j["class_count"] = class_count;
  j["exponent"] = exponent_log;
  j["abelian_invariants"] = abelian_invariants;
  j["nilpotency_class"] = nilpotency_class;
  return j.dump();
}

Subgroup derived_subgroup(const PcGroup& g) {
  std::vector<ExponentVector> seeds;
  for (int i = 1; i <= g.gen_count(); ++i)
    for (int j = i + 1; j <= g.gen_count(); ++j)
      seeds.push_back(g.commutator(g.generator(i), g.generator(j)));
  return Subgroup::normal_closure(g, seeds);
}

std::vector<Subgroup> lower_central_series(const PcGroup& g) {
  std::vector<Subgroup> series;
  series.push_back(Subgroup::whole(g));
  while (series.back().order_log() > 0) {
    std::vector<ExponentVector> seeds;
    for (const ExponentVector& u : series.back().igs())
      for (int i = 1; i <= g.gen_count(); ++i)
        seeds.push_back(g.commutator(u, g.generator(i)));
    Subgroup next = Subgroup::normal_closure(g, seeds);
    if (next.order_log() >= series.back().order_log() &&
        series.back().order_log() > 0)
      throw std::logic_error(
          "lower_central_series: series failed to descend (inconsistent "
          "presentation?)");
    series.push_back(std::move(next));
  }
  return series;
}

int nilpotency_class(const PcGroup& g) {
  return static_cast<int>(lower_central_series(g).size()) - 1;
}

// Echelon subgroup machinery over element codes: pivot per member, full
// member bitset maintained so repeated adds are O(1) skips. Closure adds
// pairwise commutators and p-th powers, which drop strictly in pivot.
class InvariantEngine::CodeSubgroup {
public:
  explicit CodeSubgroup(const ElementTable& t)
      : t_(&t), members_(t.size(), 0), list_{0} {
    members_[0] = 1;
  }

  bool contains(std::uint32_t x) const { return members_[x] != 0; }
  int rank() const { return rank_; }
  std::uint64_t size() const { return list_.size(); }
  const std::vector<std::uint32_t>& element_codes() const { return list_; }
  const std::vector<std::uint8_t>& bitset() const { return members_; }

  std::vector<std::uint32_t> igs_codes() const {
    std::vector<std::uint32_t> out;
    for (int i = 1; i <= kMaxGens; ++i)
      if (filled_[i]) out.push_back(slot_[i]);
    return out;
  }

  bool add(std::uint32_t x) {
    if (contains(x)) return false;
    bool grew = false;
    std::vector<std::uint32_t> work{x};
    while (!work.empty()) {
      std::uint32_t t = work.back();
      work.pop_back();
      if (contains(t)) continue;
      grew |= place(t, work);
    }
    return grew;
  }

  int pivot(std::uint32_t x) const {
    for (int k = t_->gen_count(); k >= 1; --k)
      if (t_->digit(x, k) != 0) return k;
    return 0;
  }

private:
  bool place(std::uint32_t x, std::vector<std::uint32_t>& work) {
    const Residue p = t_->prime();
    for (;;) {
      if (members_[x]) return false;
      const int piv = pivot(x);
      if (piv == 0) return false;
      if (filled_[piv]) {
        x = t_->mul(x, slot_pow_[piv][p - t_->digit(x, piv)]);
        continue;
      }
      // normalize the leading digit to 1 and record the power chain
      const Residue d = static_cast<Residue>(t_->digit(x, piv));
      const Residue dinv = mod_inverse(d, p);
      std::uint32_t u = 0;
      for (Residue k = 0; k < dinv; ++k) u = t_->mul(u, x);
      slot_[piv] = u;
      filled_[piv] = true;
      slot_pow_[piv].assign(p, 0);
      for (Residue e = 1; e < p; ++e)
        slot_pow_[piv][e] = t_->mul(slot_pow_[piv][e - 1], u);
      ++rank_;
      for (int k = 1; k <= kMaxGens; ++k) {
        if (!filled_[k] || k == piv) continue;
        const std::uint32_t a = slot_[k];
        const std::uint32_t ab = t_->mul(a, u);
        const std::uint32_t ba = t_->mul(u, a);
        work.push_back(t_->divide(ba, ab));  // [a, u]
        work.push_back(t_->divide(ab, ba));  // [u, a]
      }
      work.push_back(t_->pow_p(u));
      rebuild();
      return true;
    }
  }

  void rebuild() {
    const Residue p = t_->prime();
    list_.assign(1, 0);
    for (int i = 1; i <= kMaxGens; ++i) {
      if (!filled_[i]) continue;
      const std::size_t base = list_.size();
      for (Residue e = 1; e < p; ++e) {
        const std::uint32_t pw = slot_pow_[i][e];
        for (std::size_t k = 0; k < base; ++k)
          list_.push_back(t_->mul(list_[k], pw));
      }
    }
    std::fill(members_.begin(), members_.end(), 0);
    for (std::uint32_t c : list_) members_[c] = 1;
  }

  const ElementTable* t_;
  std::array<std::uint32_t, kMaxGens + 1> slot_{};
  std::array<bool, kMaxGens + 1> filled_{};
  std::array<std::vector<std::uint32_t>, kMaxGens + 1> slot_pow_;
  std::vector<std::uint8_t> members_;
  std::vector<std::uint32_t> list_;
  int rank_ = 0;
};

InvariantEngine::InvariantEngine(const PcGroup& g, std::uint64_t budget)
    : g_(&g), tab_(g, budget) {}

const std::vector<std::uint8_t>& InvariantEngine::centre_bitset() {
  if (!centre_bits_.empty()) return centre_bits_;
  const std::uint32_t n = tab_.size();
  centre_bits_.assign(n, 0);
  const int gens = tab_.gen_count();
  for (std::uint32_t x = 0; x < n; ++x) {
    bool central = true;
    for (int i = 1; i <= gens && central; ++i)
      central = tab_.comm(x, i) == 0;
    if (central) {
      centre_bits_[x] = 1;
      centre_codes_.push_back(x);
    }
  }
  return centre_bits_;
}

namespace {

Subgroup subgroup_from_codes(const PcGroup& g, const ElementTable& t,
                             const std::vector<std::uint32_t>& codes) {
  std::vector<ExponentVector> seeds;
  seeds.reserve(codes.size());
  for (std::uint32_t c : codes) seeds.push_back(t.decode(c));
  return Subgroup::closure(g, seeds);
}

}  // namespace

Subgroup InvariantEngine::center() {
  centre_bitset();
  CodeSubgroup cs(tab_);
  for (std::uint32_t c : centre_codes_) cs.add(c);
  return subgroup_from_codes(*g_, tab_, cs.igs_codes());
}

Subgroup InvariantEngine::derived() {
  CodeSubgroup cs(tab_);
  const std::uint32_t n = tab_.size();
  for (std::uint32_t x = 0; x < n; ++x)
    for (int i = 1; i <= tab_.gen_count(); ++i) cs.add(tab_.comm(x, i));
  return subgroup_from_codes(*g_, tab_, cs.igs_codes());
}

std::vector<Subgroup> InvariantEngine::upper_central_series() {
  const std::uint32_t n = tab_.size();
  const int gens = tab_.gen_count();
  std::vector<Subgroup> out;
  out.push_back(Subgroup(*g_));  // Z_0 = 1
  std::vector<std::uint8_t> level(n, 0);
  level[0] = 1;
  std::uint64_t level_size = 1;
  while (level_size < n) {
    std::vector<std::uint8_t> next(n, 0);
    std::uint64_t next_size = 0;
    for (std::uint32_t x = 0; x < n; ++x) {
      bool in = true;
      for (int i = 1; i <= gens && in; ++i) in = level[tab_.comm(x, i)] != 0;
      if (in) {
        next[x] = 1;
        ++next_size;
      }
    }
    if (next_size == level_size)
      throw std::logic_error(
          "upper_central_series: series failed to ascend (not nilpotent?)");
    CodeSubgroup cs(tab_);
    for (std::uint32_t x = 0; x < n; ++x)
      if (next[x]) cs.add(x);
    out.push_back(subgroup_from_codes(*g_, tab_, cs.igs_codes()));
    level = std::move(next);
    level_size = next_size;
  }
  return out;
}

std::vector<Subgroup> InvariantEngine::lower_central_series() {
  const std::uint32_t n = tab_.size();
  const int gens = tab_.gen_count();
  std::vector<Subgroup> out;
  out.push_back(Subgroup::whole(*g_));

  // gamma_2 from the full enumeration, then iterate over element lists of
  // the successive terms. For H normal, <[h, a_i] : h in H> = [H, G].
  CodeSubgroup cur(tab_);
  for (std::uint32_t x = 0; x < n; ++x)
    for (int i = 1; i <= gens; ++i) cur.add(tab_.comm(x, i));
  out.push_back(subgroup_from_codes(*g_, tab_, cur.igs_codes()));

  while (cur.rank() > 0) {
    CodeSubgroup next(tab_);
    for (std::uint32_t x : cur.element_codes())
      for (int i = 1; i <= gens; ++i) next.add(tab_.comm(x, i));
    if (next.rank() >= cur.rank())
      throw std::logic_error("lower_central_series: failed to descend");
    out.push_back(subgroup_from_codes(*g_, tab_, next.igs_codes()));
    cur = std::move(next);
  }
  return out;
}

Subgroup InvariantEngine::agemo(int i) {
  if (i < 0) throw std::invalid_argument("agemo: negative index");
  if (i == 0) return Subgroup::whole(*g_);
  const std::uint32_t n = tab_.size();
  CodeSubgroup cs(tab_);
  for (std::uint32_t x = 0; x < n; ++x) {
    std::uint32_t t = x;
    for (int k = 0; k < i; ++k) t = tab_.pow_p(t);
    cs.add(t);
  }
  return subgroup_from_codes(*g_, tab_, cs.igs_codes());
}

std::vector<int> InvariantEngine::agemo_order_logs() {
  // Definition-level: U^i is generated by the p^i-th powers of all of G,
  // not by iterating U over the previous term (those agree only for
  // regular groups, and the definition is the contract).
  const std::uint32_t n = tab_.size();
  std::vector<int> logs{tab_.gen_count()};
  std::vector<std::uint32_t> powers(n);
  for (std::uint32_t x = 0; x < n; ++x) powers[x] = tab_.pow_p(x);
  for (;;) {
    CodeSubgroup cs(tab_);
    for (std::uint32_t x = 0; x < n; ++x) cs.add(powers[x]);
    logs.push_back(cs.rank());
    if (cs.rank() == 0) break;
    for (std::uint32_t x = 0; x < n; ++x) powers[x] = tab_.pow_p(powers[x]);
  }
  return logs;
}

OrderType InvariantEngine::order_type() {
  const std::vector<int> logs = agemo_order_logs();
  std::vector<int> w;
  for (std::size_t i = 0; i + 1 < logs.size(); ++i)
    w.push_back(logs[i] - logs[i + 1]);
  return order_type_from_w(w);
}

std::map<std::uint64_t, std::uint64_t>
InvariantEngine::conjugacy_class_sizes() {
  const std::uint32_t n = tab_.size();
  const int gens = tab_.gen_count();
  std::map<std::uint64_t, std::uint64_t> sizes;
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<std::uint32_t> stack;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::uint64_t count = 0;
    seen[x] = 1;
    stack.push_back(x);
    while (!stack.empty()) {
      const std::uint32_t y = stack.back();
      stack.pop_back();
      ++count;
      for (int i = 1; i <= gens; ++i) {
        const std::uint32_t z = tab_.conj(y, i);
        if (!seen[z]) {
          seen[z] = 1;
          stack.push_back(z);
        }
      }
    }
    sizes[count] += 1;
  }
  return sizes;
}

int InvariantEngine::exponent_log() {
  const std::uint32_t n = tab_.size();
  int best = 0;
  for (std::uint32_t x = 0; x < n; ++x) {
    int k = 0;
    std::uint32_t t = x;
    while (t != 0) {
      t = tab_.pow_p(t);
      ++k;
    }
    best = std::max(best, k);
  }
  return best;
}

std::vector<int> InvariantEngine::join_chain_logs() {
  // logs of U^i(G) * G' for i = 0, 1, ... until the chain hits G'.
  CodeSubgroup der(tab_);
  const std::uint32_t n = tab_.size();
  for (std::uint32_t x = 0; x < n; ++x)
    for (int i = 1; i <= tab_.gen_count(); ++i) der.add(tab_.comm(x, i));

  std::vector<int> logs{tab_.gen_count()};
  std::vector<std::uint32_t> powers(n);
  for (std::uint32_t x = 0; x < n; ++x) powers[x] = tab_.pow_p(x);
  for (;;) {
    CodeSubgroup join(tab_);
    for (std::uint32_t c : der.igs_codes()) join.add(c);
    for (std::uint32_t x = 0; x < n; ++x) join.add(powers[x]);
    logs.push_back(join.rank());
    if (join.rank() == der.rank()) break;
    for (std::uint32_t x = 0; x < n; ++x) powers[x] = tab_.pow_p(powers[x]);
  }
  return logs;
}

namespace {

std::vector<int> abelian_type_from_join_logs(const std::vector<int>& logs) {
  std::vector<int> w;
  for (std::size_t i = 0; i + 1 < logs.size(); ++i)
    w.push_back(logs[i] - logs[i + 1]);
  while (!w.empty() && w.back() == 0) w.pop_back();
  return order_type_from_w(w).m;
}

}  // namespace

std::vector<int> InvariantEngine::abelian_invariants() {
  // order type of G/G': w_i = log |U^(i-1)(G)G' / U^i(G)G'|, and the
  // abelian type is the conjugate partition of w.
  return abelian_type_from_join_logs(join_chain_logs());
}

int InvariantEngine::frattini_quotient_rank() {
  // Phi(G) = U^1(G) G', the first join term.
  return tab_.gen_count() - join_chain_logs()[1];
}

InvariantProfile InvariantEngine::profile() {
  InvariantProfile pr;
  pr.order_type = order_type();

  centre_bitset();
  std::uint64_t zsize = centre_codes_.size();
  int zlog = 0;
  while (zsize > 1) {
    zsize /= tab_.prime();
    ++zlog;
  }
  pr.centre_order_log = zlog;

  const std::vector<Subgroup> lcs = lower_central_series();
  for (const Subgroup& s : lcs) pr.lcs_order_logs.push_back(s.order_log());
  pr.derived_order_log = lcs.size() > 1 ? lcs[1].order_log() : 0;
  pr.nilpotency_class = static_cast<int>(lcs.size()) - 1;

  const std::vector<Subgroup> ucs = upper_central_series();
  for (const Subgroup& s : ucs) pr.ucs_order_logs.push_back(s.order_log());

  pr.class_size_multiset = conjugacy_class_sizes();
  for (const auto& [size, count] : pr.class_size_multiset)
    pr.class_count += count;

  pr.exponent_log = exponent_log();
  const std::vector<int> join_logs = join_chain_logs();
  pr.abelian_invariants = abelian_type_from_join_logs(join_logs);
  pr.frattini_quotient_rank = tab_.gen_count() - join_logs[1];
  return pr;
}

}  // namespace p6cat
