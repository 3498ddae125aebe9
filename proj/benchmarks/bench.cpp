#include <benchmark/benchmark.h>

#include "lensspec/isometry.hpp"
#include "lensspec/lattice.hpp"
#include "lensspec/search.hpp"
#include "lensspec/spectra.hpp"
#include "lensspec/weights.hpp"

using namespace lensspec;

static const std::vector<LensParams>& sample_lenses() {
  static const std::vector<LensParams> lenses = {
      LensParams(49, {1, 6, 15}), LensParams(147, {1, 20, 43}), LensParams(49, {1, 6, 8, 20}),
      LensParams(121, {1, 10, 23, 56})};
  return lenses;
}

static void BM_ReducedTable(benchmark::State& state) {
  const LensParams& lens = sample_lenses()[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(lens.to_string());
  const CongruenceLattice lattice = lens.lattice();
  for (auto _ : state) benchmark::DoNotOptimize(count_table_reduced(lattice));
}
BENCHMARK(BM_ReducedTable)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_TruncatedTable(benchmark::State& state) {
  const CongruenceLattice lattice(121, {1, 10, 23, 56});
  for (auto _ : state) benchmark::DoNotOptimize(count_table_truncated(lattice, state.range(0)));
}
BENCHMARK(BM_TruncatedTable)->Arg(10)->Arg(40)->Arg(121)->Unit(benchmark::kMillisecond);

static void BM_CanonicalForm(benchmark::State& state) {
  const LensParams lens(state.range(0), {1, 21, 34, 54});
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(lens));
}
BENCHMARK(BM_CanonicalForm)->Arg(121)->Arg(997);

static void BM_Freudenthal(benchmark::State& state) {
  const HighestWeight h{state.range(0), 3, 0};
  for (auto _ : state) {
    MultiplicityEngine engine;
    benchmark::DoNotOptimize(engine.multiplicity(h, std::vector<int64_t>{1, 0, 0}));
  }
}
BENCHMARK(BM_Freudenthal)->Arg(4)->Arg(8)->Arg(16);

static void BM_DimInvariantsKP(benchmark::State& state) {
  const CountTable reduced = count_table_reduced(CongruenceLattice(49, {1, 6, 15}));
  const PiKPLabel label{state.range(0), static_cast<int>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(dim_invariants_kp(reduced, label));
}
BENCHMARK(BM_DimInvariantsKP)->Args({10, 0})->Args({1000, 0})->Args({10, 2})->Args({60, 2});

static void BM_GroupsAt(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int64_t q = state.range(1);
  for (auto _ : state) benchmark::DoNotOptimize(groups_at(q, m, 1));
}
BENCHMARK(BM_GroupsAt)->Args({3, 121})->Args({3, 147})->Args({4, 81})->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
