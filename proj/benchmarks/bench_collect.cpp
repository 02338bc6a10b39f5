#include <benchmark/benchmark.h>

#include <random>

#include "p6cat/element_table.hpp"
#include "p6cat/invariants.hpp"

using namespace p6cat;

namespace {

// class-3 rank-6 workload typical of catalog rows
PcGroup sample_group(Residue p) {
  PcPresentation pres(6, p);
  ExponentVector w;
  w.e[3] = 1;
  pres.set_commutator(6, 5, w);
  w = {};
  w.e[2] = 1;
  pres.set_commutator(6, 3, w);
  w = {};
  w.e[1] = 1;
  pres.set_commutator(5, 3, w);
  PcGroup g(std::move(pres), PrimeContext(p));
  g.consistency_check();
  return g;
}

std::vector<ExponentVector> sample_elements(const PcGroup& g, int count) {
  std::mt19937_64 rng(123);
  std::vector<ExponentVector> out;
  for (int k = 0; k < count; ++k) {
    ExponentVector v;
    for (int i = 1; i <= g.gen_count(); ++i)
      v.e[i] = static_cast<std::uint8_t>(rng() % g.prime());
    out.push_back(v);
  }
  return out;
}

void BM_CollectMultiply(benchmark::State& state) {
  const PcGroup g = sample_group(static_cast<Residue>(state.range(0)));
  const auto elems = sample_elements(g, 256);
  std::size_t k = 0;
  for (auto _ : state) {
    const auto& x = elems[k % elems.size()];
    const auto& y = elems[(k + 7) % elems.size()];
    benchmark::DoNotOptimize(g.multiply(x, y));
    ++k;
  }
}
BENCHMARK(BM_CollectMultiply)->Arg(7)->Arg(13);

void BM_ConsistencyCheck(benchmark::State& state) {
  for (auto _ : state) {
    PcGroup g = sample_group(static_cast<Residue>(state.range(0)));
    benchmark::DoNotOptimize(g.consistency_check().consistent);
  }
}
BENCHMARK(BM_ConsistencyCheck)->Arg(7)->Arg(13);

void BM_ElementTableBuild(benchmark::State& state) {
  const PcGroup g = sample_group(static_cast<Residue>(state.range(0)));
  for (auto _ : state) {
    ElementTable tab(g);
    benchmark::DoNotOptimize(tab.size());
  }
}
BENCHMARK(BM_ElementTableBuild)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_FullProfile(benchmark::State& state) {
  const PcGroup g = sample_group(static_cast<Residue>(state.range(0)));
  for (auto _ : state) {
    InvariantEngine eng(g);
    benchmark::DoNotOptimize(eng.profile().class_count);
  }
}
BENCHMARK(BM_FullProfile)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
