#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "p6cat/element_table.hpp"
#include "p6cat/subgroup.hpp"

namespace p6cat {

// The Hall order type: w_i = log_p |U^(i-1)(G) / U^i(G)| over the agemo
// chain U^i(G) = <g^(p^i)>, and m_j = #{i : w_i >= j}. The partition
// m_1 m_2 ... is the order type; runs render with the m^delta convention
// ("1^6" for elementary abelian, "6" for cyclic).
struct OrderType {
  std::vector<int> w;
  std::vector<int> m;
  std::string rendered;

  friend bool operator==(const OrderType&, const OrderType&) = default;
};
OrderType order_type_from_w(const std::vector<int>& w);

// Fingerprint of a group. Orders are stored as logs base p. This is a
// necessary-condition fingerprint, not a complete isomorphism invariant:
// distinct catalog entries may legitimately share a profile.
struct InvariantProfile {
  OrderType order_type;
  int centre_order_log = 0;
  int derived_order_log = 0;
  int frattini_quotient_rank = 0;
  std::vector<int> lcs_order_logs;
  std::vector<int> ucs_order_logs;
  std::map<std::uint64_t, std::uint64_t> class_size_multiset;  // size -> count
  std::uint64_t class_count = 0;
  int exponent_log = 0;
  std::vector<int> abelian_invariants;  // partition, descending
  int nilpotency_class = 0;

  // Compact key=value fields for the line-oriented report.
  std::string to_line() const;
  // Structured export with the field names above.
  std::string to_json() const;
  // Equality key used for collision reporting.
  std::string fingerprint() const { return to_line(); }
};

// Collection-based routes that need no element enumeration.
//
// The derived subgroup is the normal closure of the pairwise generator
// commutators. Lower central terms use gamma_{k+1} = normal closure of
// {[x, a] : x in igs(gamma_k), a generator}; for H normal and generated
// by X this closure equals [H, G].
Subgroup derived_subgroup(const PcGroup& g);
std::vector<Subgroup> lower_central_series(const PcGroup& g);
int nilpotency_class(const PcGroup& g);

// Enumeration-backed invariants for one group, built on an ElementTable.
// All operations are read-only over the underlying group; one engine per
// worker is the intended parallel pattern.
class InvariantEngine {
public:
  explicit InvariantEngine(const PcGroup& g,
                           std::uint64_t budget = kDefaultBudget);

  const ElementTable& table() const { return tab_; }
  const PcGroup& group() const { return *g_; }

  // {x : [x, a_i] = 1 for every generator}, by enumeration filter.
  Subgroup center();
  // Full-enumeration derived subgroup <[x, a_i] : x in G>.
  Subgroup derived();
  std::vector<Subgroup> upper_central_series();
  std::vector<Subgroup> lower_central_series();
  // Subgroup generated by all p^i-th powers.
  Subgroup agemo(int i);
  // log_p |U^0|, |U^1|, ... ending with the first trivial term.
  std::vector<int> agemo_order_logs();
  OrderType order_type();
  std::map<std::uint64_t, std::uint64_t> conjugacy_class_sizes();
  // Max element order over the whole group, as a log.
  int exponent_log();
  // Order type of G/G', as a partition of log_p |G/G'|.
  std::vector<int> abelian_invariants();
  int frattini_quotient_rank();

  InvariantProfile profile();

private:
  class CodeSubgroup;
  std::vector<int> join_chain_logs();  // logs of U^i(G)G' for i = 0,1,...

  const PcGroup* g_;
  ElementTable tab_;
  std::vector<std::uint32_t> centre_codes_;   // filled by centre_bitset()
  std::vector<std::uint8_t> centre_bits_;
  const std::vector<std::uint8_t>& centre_bitset();
};

}  // namespace p6cat
