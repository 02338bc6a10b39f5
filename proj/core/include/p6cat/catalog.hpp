#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "p6cat/dsl.hpp"
#include "p6cat/invariants.hpp"

namespace p6cat::catalog {

struct Options {
  std::uint64_t budget = kDefaultBudget;
  int workers = 0;  // 0 = hardware concurrency
  bool allow_p5 = false;
  // Profiles (and the centre-structure checks) are computed at p = 7 by
  // default; at p >= 11 they sit behind this flag because the element
  // tables grow with p^6.
  std::optional<bool> with_profiles;

  bool profiles_for(Residue p) const {
    return with_profiles.value_or(p <= 7);
  }
};

// Parsed data directory: one or more .p6 files, loaded in filename order.
struct LoadResult {
  std::vector<dsl::FamilySpec> specs;
  std::vector<std::string> errors;  // "file:line:col: message"
  bool ok() const { return errors.empty(); }
};
LoadResult load_directory(const std::filesystem::path& dir);
LoadResult load_file(const std::filesystem::path& file);

struct EntryId {
  Residue p = 0;
  int index = 0;  // 1-based, dense, catalog order
};

struct CatalogEntry {
  EntryId id;
  int family = 0;
  std::string label;  // family label + parameter binding suffix
  dsl::ParamBinding binding;
  const dsl::FamilySpec* spec = nullptr;
  PcGroup group;
  std::optional<InvariantProfile> profile;
};

struct EntrySummary {
  int index = 0;
  int family = 0;
  std::string label;
  bool consistent = false;
  std::string failure;  // set when not consistent / not compilable
  std::optional<InvariantProfile> profile;
};

struct VerificationReport {
  Residue p = 0;
  std::optional<std::uint64_t> expected_count;  // absent for p = 5 runs
  std::uint64_t actual_count = 0;               // consistent entries
  std::vector<std::string> consistency_failures;
  std::vector<std::string> centrality_failures;
  std::map<int, std::uint64_t> family_counts;
  // Entry indices sharing an invariant profile; informational only.
  std::vector<std::vector<int>> profile_collisions;
  bool profiles_computed = false;
  std::vector<std::string> warnings;
  std::vector<EntrySummary> entries;

  bool passed() const {
    return (!expected_count || *expected_count == actual_count) &&
           consistency_failures.empty() && centrality_failures.empty();
  }
};

// Strict mode: compiles and consistency-checks every (spec, binding) pair
// in catalog order and aborts with the failing label on any failure.
// Profiles are left unset (compute per entry as needed).
std::vector<CatalogEntry> build_catalog(Residue p,
                                        const std::vector<dsl::FamilySpec>& specs,
                                        const Options& opts = {});

// Report mode: never throws on presentation failures; populates the full
// report. Deterministic for fixed inputs regardless of worker count.
VerificationReport verify_catalog(Residue p,
                                  const std::vector<dsl::FamilySpec>& specs,
                                  const Options& opts = {});

std::string render_text(const VerificationReport& rep);
std::string render_machine(const VerificationReport& rep);

// Shared helper: catalog order is family, then file order of rows, then
// declared parameter order.
std::vector<const dsl::FamilySpec*> catalog_order(
    const std::vector<dsl::FamilySpec>& specs);

}  // namespace p6cat::catalog
