// Command-line front end: counting, catalog verification, inspection,
// listing and CAS export for the order-p^6 group catalog.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "p6cat/catalog.hpp"

namespace {

using namespace p6cat;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct CommonArgs {
  std::uint32_t p = 7;
  std::string data_dir = "data";
  std::uint64_t budget = kDefaultBudget;
  int workers = 0;
  bool allow_p5 = false;
  bool profiles_on = false;
  bool profiles_off = false;
  std::string format = "text";
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_data = true) {
  cmd->add_option("--p", args.p, "prime p (>= 7 unless --allow-p5)")
      ->required();
  if (with_data)
    cmd->add_option("--data", args.data_dir, "directory of .p6 data files");
  cmd->add_option("--budget", args.budget,
                  "element-operation budget for enumeration work");
  cmd->add_option("--workers", args.workers,
                  "worker threads (0 = available parallelism)");
  cmd->add_flag("--allow-p5", args.allow_p5,
                "permit p = 5 (families 35..39 unreliable)");
  cmd->add_flag("--profiles", args.profiles_on,
                "force profile computation (default only at p = 7)");
  cmd->add_flag("--no-profiles", args.profiles_off,
                "skip profile computation");
  cmd->add_option("--format", args.format, "output format: text or machine")
      ->check(CLI::IsMember({"text", "machine"}));
}

catalog::Options to_options(const CommonArgs& args) {
  catalog::Options opts;
  opts.budget = args.budget;
  opts.workers = args.workers;
  opts.allow_p5 = args.allow_p5;
  if (args.profiles_on) opts.with_profiles = true;
  if (args.profiles_off) opts.with_profiles = false;
  return opts;
}

std::vector<dsl::FamilySpec> load_or_die(const std::string& dir) {
  catalog::LoadResult lr = catalog::load_directory(dir);
  if (!lr.ok()) {
    for (const std::string& e : lr.errors) std::cerr << "error: " << e << "\n";
    std::exit(kExitUsage);
  }
  return std::move(lr.specs);
}

int cmd_count(const CommonArgs& args) {
  const GroupCountTerms t = group_count_terms(args.p);
  if (args.format == "machine") {
    std::cout << "count p=" << args.p << " total=" << t.total
              << " quadratic=" << t.quadratic << " linear=" << t.linear
              << " constant=" << t.constant << " gcd3=" << t.gcd3
              << " gcd4=" << t.gcd4 << " gcd5=" << t.gcd5 << "\n";
  } else {
    std::cout << t.total << "\n";
    std::cout << "  3p^2           = " << t.quadratic << "\n";
    std::cout << "  39p            = " << t.linear << "\n";
    std::cout << "  constant       = " << t.constant << "\n";
    std::cout << "  24 gcd(p-1,3)  = " << t.gcd3 << "\n";
    std::cout << "  11 gcd(p-1,4)  = " << t.gcd4 << "\n";
    std::cout << "  2 gcd(p-1,5)   = " << t.gcd5 << "\n";
  }
  return kExitPass;
}

int cmd_verify(const CommonArgs& args) {
  const auto specs = load_or_die(args.data_dir);
  const catalog::VerificationReport rep =
      catalog::verify_catalog(args.p, specs, to_options(args));
  std::cout << (args.format == "machine" ? catalog::render_machine(rep)
                                         : catalog::render_text(rep));
  return rep.passed() ? kExitPass : kExitFail;
}

struct Selector {
  int index = 0;
  int family = 0;
  std::string label;
};

std::vector<const catalog::CatalogEntry*> select(
    const std::vector<catalog::CatalogEntry>& entries, const Selector& sel) {
  std::vector<const catalog::CatalogEntry*> out;
  for (const catalog::CatalogEntry& e : entries) {
    if (sel.index > 0 && e.id.index != sel.index) continue;
    if (sel.family > 0 && e.family != sel.family) continue;
    if (!sel.label.empty() && e.label.find(sel.label) == std::string::npos)
      continue;
    out.push_back(&e);
  }
  return out;
}

int cmd_list(const CommonArgs& args, const Selector& sel) {
  const auto specs = load_or_die(args.data_dir);
  const auto entries = catalog::build_catalog(args.p, specs, to_options(args));
  const auto chosen = select(entries, sel);
  for (const auto* e : chosen) {
    if (args.format == "machine")
      std::cout << "entry index=" << e->id.index << " family=" << e->family
                << " label=\"" << e->label << "\"\n";
    else
      std::cout << e->id.index << "  " << e->label << "\n";
  }
  if (chosen.empty()) {
    std::cerr << "error: selector matched no catalog entries\n";
    return kExitUsage;
  }
  return kExitPass;
}

int cmd_inspect(const CommonArgs& args, const Selector& sel) {
  const auto specs = load_or_die(args.data_dir);
  const auto entries = catalog::build_catalog(args.p, specs, to_options(args));
  const auto chosen = select(entries, sel);
  if (chosen.empty()) {
    std::cerr << "error: selector matched no catalog entries\n";
    return kExitUsage;
  }
  for (const auto* e : chosen) {
    InvariantEngine eng(e->group, args.budget);
    const InvariantProfile pr = eng.profile();
    if (args.format == "machine") {
      std::cout << "entry index=" << e->id.index << " family=" << e->family
                << " label=\"" << e->label << "\" " << pr.to_line() << "\n";
    } else {
      std::cout << "entry " << e->id.index << "  " << e->label << "\n";
      std::cout << "  order            p^6 = " << e->group.order() << "\n";
      std::cout << "  order type       " << pr.order_type.rendered << "\n";
      std::cout << "  centre order     p^" << pr.centre_order_log << "\n";
      std::cout << "  derived order    p^" << pr.derived_order_log << "\n";
      std::cout << "  frattini rank    " << pr.frattini_quotient_rank << "\n";
      std::cout << "  lcs orders       ";
      for (std::size_t i = 0; i < pr.lcs_order_logs.size(); ++i)
        std::cout << (i ? "," : "") << "p^" << pr.lcs_order_logs[i];
      std::cout << "\n  ucs orders       ";
      for (std::size_t i = 0; i < pr.ucs_order_logs.size(); ++i)
        std::cout << (i ? "," : "") << "p^" << pr.ucs_order_logs[i];
      std::cout << "\n  classes          " << pr.class_count << " (";
      bool first = true;
      for (const auto& [size, count] : pr.class_size_multiset) {
        std::cout << (first ? "" : ", ") << count << " of size " << size;
        first = false;
      }
      std::cout << ")\n";
      std::cout << "  exponent         p^" << pr.exponent_log << "\n";
      std::cout << "  abelianization   ";
      for (std::size_t i = 0; i < pr.abelian_invariants.size(); ++i)
        std::cout << (i ? "+" : "") << pr.abelian_invariants[i];
      std::cout << "\n  nilpotency class " << pr.nilpotency_class << "\n";
      std::cout << "  json             " << pr.to_json() << "\n";
    }
  }
  return kExitPass;
}

int cmd_export(const CommonArgs& args, const Selector& sel,
               const std::string& dialect_name, const std::string& out_dir) {
  const dsl::CasDialect dialect = dsl::parse_dialect(dialect_name);
  const auto specs = load_or_die(args.data_dir);
  const auto entries = catalog::build_catalog(args.p, specs, to_options(args));
  const auto chosen = select(entries, sel);
  if (chosen.empty()) {
    std::cerr << "error: selector matched no catalog entries\n";
    return kExitUsage;
  }
  std::filesystem::create_directories(out_dir);
  const char* ext = dialect == dsl::CasDialect::GapStyle ? ".g" : ".m";
  for (const auto* e : chosen) {
    const std::string script = dsl::emit_cas(
        e->group.presentation(), e->label, e->binding, dialect);
    char name[64];
    std::snprintf(name, sizeof name, "entry_p%u_%06d%s", args.p, e->id.index,
                  ext);
    std::ofstream out(std::filesystem::path(out_dir) / name,
                      std::ios::binary);
    out << script;
  }
  std::cout << chosen.size() << " script(s) written to " << out_dir << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"catalog of the groups of order p^6 (p >= 7)"};
  app.require_subcommand(1);

  CommonArgs count_args, verify_args, list_args, inspect_args, export_args;
  Selector list_sel, inspect_sel, export_sel;
  std::string dialect = "gap-style";
  std::string out_dir = "cas_out";

  CLI::App* count = app.add_subcommand("count", "print the counting formula value");
  add_common(count, count_args, /*with_data=*/false);

  CLI::App* verify = app.add_subcommand("verify", "verify the catalog data");
  add_common(verify, verify_args);

  CLI::App* list = app.add_subcommand("list", "list catalog entries");
  add_common(list, list_args);
  list->add_option("--index", list_sel.index, "select by catalog index");
  list->add_option("--family", list_sel.family, "select by family");
  list->add_option("--label", list_sel.label, "select by label substring");

  CLI::App* inspect = app.add_subcommand("inspect", "print invariant profiles");
  add_common(inspect, inspect_args);
  inspect->add_option("--index", inspect_sel.index, "select by catalog index");
  inspect->add_option("--family", inspect_sel.family, "select by family");
  inspect->add_option("--label", inspect_sel.label, "select by label substring");

  CLI::App* exp = app.add_subcommand("export", "emit CAS construction scripts");
  add_common(exp, export_args);
  exp->add_option("--index", export_sel.index, "select by catalog index");
  exp->add_option("--family", export_sel.family, "select by family");
  exp->add_option("--label", export_sel.label, "select by label substring");
  exp->add_option("--dialect", dialect, "gap-style or magma-style");
  exp->add_option("--out", out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (count->parsed()) return cmd_count(count_args);
    if (verify->parsed()) return cmd_verify(verify_args);
    if (list->parsed()) return cmd_list(list_args, list_sel);
    if (inspect->parsed()) return cmd_inspect(inspect_args, inspect_sel);
    if (exp->parsed()) return cmd_export(export_args, export_sel, dialect, out_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
