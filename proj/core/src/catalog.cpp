#include "p6cat/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

namespace p6cat::catalog {

LoadResult load_file(const std::filesystem::path& file) {
  LoadResult out;
  std::ifstream in(file);
  if (!in) {
    out.errors.push_back(file.string() + ": cannot open");
    return out;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  dsl::ParseResult pr = dsl::parse(buf.str());
  for (const dsl::Diagnostic& d : pr.diagnostics) {
    out.errors.push_back(file.string() + ":" + std::to_string(d.loc.line) +
                         ":" + std::to_string(d.loc.col) + ": " + d.message);
  }
  out.specs = std::move(pr.specs);
  return out;
}

LoadResult load_directory(const std::filesystem::path& dir) {
  LoadResult out;
  if (!std::filesystem::is_directory(dir)) {
    out.errors.push_back(dir.string() + ": not a directory");
    return out;
  }
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".p6")
      files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    out.errors.push_back(dir.string() + ": no .p6 data files");
    return out;
  }
  for (const auto& f : files) {
    LoadResult one = load_file(f);
    out.errors.insert(out.errors.end(), one.errors.begin(), one.errors.end());
    for (auto& s : one.specs) out.specs.push_back(std::move(s));
  }
  return out;
}

std::vector<const dsl::FamilySpec*> catalog_order(
    const std::vector<dsl::FamilySpec>& specs) {
  std::vector<const dsl::FamilySpec*> order;
  order.reserve(specs.size());
  for (const dsl::FamilySpec& s : specs) order.push_back(&s);
  std::stable_sort(order.begin(), order.end(),
                   [](const dsl::FamilySpec* a, const dsl::FamilySpec* b) {
                     return a->family < b->family;
                   });
  return order;
}

namespace {

struct Job {
  const dsl::FamilySpec* spec;
  dsl::ParamBinding binding;
  int index;  // 1-based catalog index
  std::string label;
};

void check_prime_supported(Residue p, const Options& opts,
                           std::vector<std::string>* warnings) {
  if (!is_prime(p))
    throw std::invalid_argument("catalog: " + std::to_string(p) +
                                " is not prime");
  if (p >= 7) return;
  if (p == 5 && opts.allow_p5) {
    if (warnings)
      warnings->push_back(
          "p = 5 requested: the catalog presentations are reliable at p = 5 "
          "except for some groups in families 35..39; counts are not "
          "checked against the formula");
    return;
  }
  throw UnsupportedPrimeError(
      "catalog: prime " + std::to_string(p) +
      " is below 7 (use the p=5 override to proceed at your own risk)");
}

std::vector<Job> plan_jobs(const PrimeContext& ctx,
                           const std::vector<const dsl::FamilySpec*>& order) {
  std::vector<Job> jobs;
  int index = 0;
  for (const dsl::FamilySpec* spec : order) {
    for (dsl::ParamBinding& b : dsl::expand(*spec, ctx)) {
      Job j;
      j.spec = spec;
      j.binding = std::move(b);
      j.index = ++index;
      const std::string base = spec->label.empty()
                                   ? "(" + std::to_string(spec->family) + ",?)"
                                   : spec->label;
      j.label = base + j.binding.suffix();
      jobs.push_back(std::move(j));
    }
  }
  return jobs;
}

struct WorkResult {
  EntrySummary summary;
  bool a1_central = true;
  bool beta_centre_ok = true;
  std::optional<PcGroup> group;
};

WorkResult process_job(const Job& job, const PrimeContext& ctx, bool profiles,
                       std::uint64_t budget, bool keep_group) {
  WorkResult res;
  res.summary.index = job.index;
  res.summary.family = job.spec->family;
  res.summary.label = job.label;
  try {
    dsl::CompiledPresentation cp = dsl::compile(*job.spec, job.binding, ctx, 6);
    PcGroup g(std::move(cp.pres), ctx);
    const ConsistencyReport& rep = g.consistency_check();
    if (!rep.consistent) {
      res.summary.failure =
          "inconsistent: " + rep.violations.front().condition + " gives " +
          rep.violations.front().lhs.str(g.gen_count()) + " vs " +
          rep.violations.front().rhs.str(g.gen_count());
      return res;
    }
    res.summary.consistent = true;
    if (profiles) {
      InvariantEngine eng(g, budget);
      res.summary.profile = eng.profile();
      Subgroup z = eng.center();
      res.a1_central = z.contains(g.generator(1));
      if (job.spec->beta_count > 0) {
        bool ok = z.order_log() == job.spec->beta_count;
        for (int b = 1; b <= job.spec->beta_count && ok; ++b)
          ok = z.contains(g.generator(b));
        res.beta_centre_ok = ok;
      }
    }
    if (keep_group) res.group = std::move(g);
  } catch (const std::exception& e) {
    res.summary.failure = std::string("compile error: ") + e.what();
  }
  return res;
}

std::vector<WorkResult> run_jobs(const std::vector<Job>& jobs,
                                 const PrimeContext& ctx, bool profiles,
                                 const Options& opts, bool keep_groups) {
  std::vector<WorkResult> results(jobs.size());
  int workers = opts.workers > 0
                    ? opts.workers
                    : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  workers = std::min<int>(workers, static_cast<int>(jobs.size()) > 0
                                       ? static_cast<int>(jobs.size())
                                       : 1);
  if (workers == 1) {
    for (std::size_t k = 0; k < jobs.size(); ++k)
      results[k] = process_job(jobs[k], ctx, profiles, opts.budget, keep_groups);
    return results;
  }
  std::atomic<std::size_t> cursor{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (;;) {
        const std::size_t k = cursor.fetch_add(1);
        if (k >= jobs.size()) return;
        results[k] =
            process_job(jobs[k], ctx, profiles, opts.budget, keep_groups);
      }
    });
  }
  for (std::thread& t : pool) t.join();
  return results;
}

}  // namespace

std::vector<CatalogEntry> build_catalog(Residue p,
                                        const std::vector<dsl::FamilySpec>& specs,
                                        const Options& opts) {
  check_prime_supported(p, opts, nullptr);
  const PrimeContext ctx(p);
  const std::vector<Job> jobs = plan_jobs(ctx, catalog_order(specs));
  std::vector<WorkResult> results =
      run_jobs(jobs, ctx, /*profiles=*/false, opts, /*keep_groups=*/true);

  std::vector<CatalogEntry> entries;
  entries.reserve(results.size());
  for (std::size_t k = 0; k < results.size(); ++k) {
    WorkResult& r = results[k];
    if (!r.summary.consistent)
      throw std::runtime_error("build_catalog: entry " + r.summary.label +
                               " failed: " + r.summary.failure);
    entries.push_back(CatalogEntry{EntryId{p, r.summary.index},
                                   r.summary.family, r.summary.label,
                                   jobs[k].binding, jobs[k].spec,
                                   std::move(*r.group), std::nullopt});
  }
  return entries;
}

VerificationReport verify_catalog(Residue p,
                                  const std::vector<dsl::FamilySpec>& specs,
                                  const Options& opts) {
  VerificationReport rep;
  rep.p = p;
  check_prime_supported(p, opts, &rep.warnings);
  if (p >= 7) rep.expected_count = group_count(p);
  rep.profiles_computed = opts.profiles_for(p);

  const PrimeContext ctx(p);
  const std::vector<Job> jobs = plan_jobs(ctx, catalog_order(specs));
  std::vector<WorkResult> results =
      run_jobs(jobs, ctx, rep.profiles_computed, opts, /*keep_groups=*/false);

  std::map<std::string, std::vector<int>> by_fingerprint;
  for (WorkResult& r : results) {
    rep.family_counts[r.summary.family] += 1;
    if (r.summary.consistent) {
      ++rep.actual_count;
    } else {
      rep.consistency_failures.push_back(r.summary.label + ": " +
                                         r.summary.failure);
    }
    if (rep.profiles_computed && r.summary.consistent) {
      if (!r.a1_central)
        rep.centrality_failures.push_back(r.summary.label +
                                          ": a1 not in the computed centre");
      if (!r.beta_centre_ok)
        rep.centrality_failures.push_back(
            r.summary.label +
            ": centre is not generated by the beta generators");
      by_fingerprint[r.summary.profile->fingerprint()].push_back(
          r.summary.index);
    }
    rep.entries.push_back(std::move(r.summary));
  }
  for (auto& [fp, ids] : by_fingerprint) {
    if (ids.size() > 1) rep.profile_collisions.push_back(ids);
  }
  std::sort(rep.profile_collisions.begin(), rep.profile_collisions.end());
  return rep;
}

std::string render_text(const VerificationReport& rep) {
  std::ostringstream os;
  os << "catalog verification, p = " << rep.p << "\n";
  for (const std::string& w : rep.warnings) os << "warning: " << w << "\n";
  if (rep.expected_count)
    os << "expected count (formula): " << *rep.expected_count << "\n";
  else
    os << "expected count (formula): n/a\n";
  const std::uint64_t total =
      rep.actual_count + rep.consistency_failures.size();
  os << "consistent groups: " << rep.actual_count << "/" << total << "\n";
  os << "family counts:";
  for (const auto& [fam, count] : rep.family_counts)
    os << " " << fam << ":" << count;
  os << "\n";
  if (!rep.consistency_failures.empty()) {
    os << "consistency failures (" << rep.consistency_failures.size() << "):\n";
    for (const std::string& f : rep.consistency_failures)
      os << "  " << f << "\n";
  }
  if (rep.profiles_computed) {
    if (!rep.centrality_failures.empty()) {
      os << "centrality failures (" << rep.centrality_failures.size() << "):\n";
      for (const std::string& f : rep.centrality_failures)
        os << "  " << f << "\n";
    } else {
      os << "centrality checks: all passed\n";
    }
    os << "profile collisions (informational): " << rep.profile_collisions.size()
       << "\n";
  }
  os << "result: " << (rep.passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string render_machine(const VerificationReport& rep) {
  std::ostringstream os;
  const std::uint64_t total =
      rep.actual_count + rep.consistency_failures.size();
  os << "report p=" << rep.p << " expected="
     << (rep.expected_count ? std::to_string(*rep.expected_count)
                            : std::string("none"))
     << " actual=" << rep.actual_count << " total=" << total
     << " consistency_failures=" << rep.consistency_failures.size()
     << " centrality_failures=" << rep.centrality_failures.size()
     << " profiles=" << (rep.profiles_computed ? 1 : 0)
     << " pass=" << (rep.passed() ? 1 : 0) << "\n";
  for (const std::string& w : rep.warnings) os << "warning msg=\"" << w << "\"\n";
  for (const auto& [fam, count] : rep.family_counts)
    os << "family f=" << fam << " count=" << count << "\n";
  for (const EntrySummary& e : rep.entries) {
    os << "entry index=" << e.index << " family=" << e.family << " label=\""
       << e.label << "\" consistent=" << (e.consistent ? 1 : 0);
    if (!e.failure.empty()) os << " failure=\"" << e.failure << "\"";
    if (e.profile) os << " " << e.profile->to_line();
    os << "\n";
  }
  for (const auto& ids : rep.profile_collisions) {
    os << "collision ids=";
    for (std::size_t i = 0; i < ids.size(); ++i)
      os << (i ? "," : "") << ids[i];
    os << "\n";
  }
  return os.str();
}

}  // namespace p6cat::catalog
