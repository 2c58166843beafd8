#include <benchmark/benchmark.h>

#include <random>

#include "tate/beilinson.hpp"
#include "tate/cohomology.hpp"
#include "tate/linalg.hpp"
#include "tate/tate.hpp"

using namespace tate;

namespace {

ProductSpace p1p2() { return ProductSpace({1, 2}); }

PresentedModule structureSheaf() { return PresentedModule::free(p1p2(), {Multidegree{0, 0}}); }

} // namespace

// sparse random matrix, about 5 nonzeros per column
static void BM_Rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  PrimeField f;
  std::mt19937 rng(7);
  std::vector<Triplet> t;
  for (std::size_t c = 0; c < n; ++c)
    for (int k = 0; k < 5; ++k)
      t.push_back({static_cast<Index>(rng() % n), static_cast<Index>(c),
                   static_cast<Coeff>(rng() % f.characteristic())});
  auto m = SparseMatrix::fromTriplets(n, n, t, f);
  for (auto _ : state)
    benchmark::DoNotOptimize(rank(m, f));
}
BENCHMARK(BM_Rank)->Arg(100)->Arg(400)->Arg(1000);

static void BM_TateWindow(benchmark::State& state) {
  auto m = structureSheaf();
  TateOptions opts;
  opts.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(tateResolution(m, Multidegree{-3, -3}, Multidegree{3, 3}, opts));
}
BENCHMARK(BM_TateWindow)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_CohomologyMatrix(benchmark::State& state) {
  auto m = structureSheaf();
  for (auto _ : state)
    benchmark::DoNotOptimize(cohomologyMatrix(m, Multidegree{-3, -3}, Multidegree{3, 3}));
}
BENCHMARK(BM_CohomologyMatrix)->Unit(benchmark::kMillisecond);

static void BM_Monad(benchmark::State& state) {
  auto m = twist(koszulKernelModule(p1p2()), Multidegree{1, 1});
  for (auto _ : state)
    benchmark::DoNotOptimize(beilinsonMonad(m));
}
BENCHMARK(BM_Monad)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
