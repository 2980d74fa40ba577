#include <benchmark/benchmark.h>

#include "sympbranch/branching.hpp"
#include "sympbranch/dims.hpp"
#include "sympbranch/weyl.hpp"

using namespace sympbranch;

namespace {

void BM_FactorsLucas(benchmark::State& state) {
  const Int n = state.range(0);
  const Prime p(static_cast<Int>(state.range(1)));
  for (auto _ : state)
    for (Int l = 1; l <= n + 1; ++l) benchmark::DoNotOptimize(weyl::factors_lucas(n, l, p));
}
BENCHMARK(BM_FactorsLucas)->Args({60, 2})->Args({60, 3})->Args({500, 2})->Args({500, 7});

void BM_FactorsReflections(benchmark::State& state) {
  const Int n = state.range(0);
  const Prime p(static_cast<Int>(state.range(1)));
  for (auto _ : state)
    for (Int l = 1; l <= n + 1; ++l) benchmark::DoNotOptimize(weyl::factors_reflections(n, l, p));
}
BENCHMARK(BM_FactorsReflections)->Args({60, 2})->Args({60, 3})->Args({500, 2})->Args({500, 7});

void BM_SubmoduleIdeals(benchmark::State& state) {
  const Int n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(weyl::submodule_ideals(n, 1, Prime(2)));
}
BENCHMARK(BM_SubmoduleIdeals)->Arg(30)->Arg(62)->Arg(126);

// irr_dim caches rows per (n, p); a fresh rank each iteration keeps the
// measurement on the uncached path.
void BM_DimsTableCold(benchmark::State& state) {
  Int n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(dims::dims_table(n++, Prime(3)));
}
BENCHMARK(BM_DimsTableCold)->Arg(40)->Arg(200);

void BM_FiltrationCheck(benchmark::State& state) {
  const Int n = state.range(0);
  const Prime p(static_cast<Int>(state.range(1)));
  for (auto _ : state)
    for (Int l = 1; l <= n + 1; ++l) benchmark::DoNotOptimize(dims::check_filtration_identity(n, l, p));
}
BENCHMARK(BM_FiltrationCheck)->Args({40, 2})->Args({40, 5});

void BM_RestrictionStructure(benchmark::State& state) {
  const Int n = state.range(0);
  for (auto _ : state)
    for (Int i = 1; i <= n; ++i) benchmark::DoNotOptimize(branching::restriction_structure(n, i, Prime(3)));
}
BENCHMARK(BM_RestrictionStructure)->Arg(40)->Arg(400);

}  // namespace

BENCHMARK_MAIN();
