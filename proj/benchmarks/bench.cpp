#include <benchmark/benchmark.h>

#include "biinterval/fourier.hpp"
#include "biinterval/region.hpp"
#include "biinterval/spectra.hpp"
#include "biinterval/tiling.hpp"
#include "biinterval/verify.hpp"

using namespace biinterval;

static void BM_ClassifyRandomRegions(benchmark::State& state) {
  SplitMix64 rng(1);
  std::vector<BiIntervalRegion> regions;
  for (int i = 0; i < 1024; ++i) regions.push_back(random_region(rng, 64));
  std::size_t i = 0;
  for (auto _ : state) {
    const BiIntervalRegion& region = regions[i++ & 1023];
    benchmark::DoNotOptimize(classify_region(region));
    benchmark::DoNotOptimize(classify_tiles(region));
  }
}
BENCHMARK(BM_ClassifyRandomRegions);

static void BM_FtIndicatorRational(benchmark::State& state) {
  const BiIntervalRegion region(Rational(2, 7), Rational(19, 5));
  std::int64_t k = 1;
  for (auto _ : state) benchmark::DoNotOptimize(ft_indicator(region, Rational(k++ % 10007, 97)));
}
BENCHMARK(BM_FtIndicatorRational);

static void BM_ParsevalSum(benchmark::State& state) {
  const BiIntervalRegion region(Rational(1, 2), Rational(7, 2));
  const SpectrumSpec spec = build_spectrum(region, CaseSelector::CaseII, 3);
  for (auto _ : state) benchmark::DoNotOptimize(parseval_sum(region, spec, Rational(1, 3), state.range(0)));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ParsevalSum)->RangeMultiplier(10)->Range(100, 100000)->Complexity(benchmark::oN);

static void BM_GramMatrix(benchmark::State& state) {
  const BiIntervalRegion region(Rational(1, 3), Rational(7, 3));
  const auto freqs = enumerate_frequencies(SpectrumSpec::lattice(), Rational(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gram_matrix(region, freqs));
}
BENCHMARK(BM_GramMatrix)->Arg(25)->Arg(100);

static void BM_VerifyTiling(benchmark::State& state) {
  const BiIntervalRegion region(Rational(1, 2), Rational(9, 2));
  const TilingSpec tiling = build_tiling(region, CaseSelector::CaseII);
  const RationalInterval window{Rational(0), tiling.period * state.range(0)};
  for (auto _ : state) benchmark::DoNotOptimize(verify_tiling(region, tiling, window));
}
BENCHMARK(BM_VerifyTiling)->Arg(10)->Arg(100);

static void BM_ScanZeros(benchmark::State& state) {
  const BiIntervalRegion region(Rational(3, 8), Rational(21, 8));
  for (auto _ : state) benchmark::DoNotOptimize(scan_zeros(region, 0.0, 10.0, 1e-3, 1e-6));
}
BENCHMARK(BM_ScanZeros)->Unit(benchmark::kMillisecond);

static void BM_STilde(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(s_tilde_partial(0.37, state.range(0)));
}
BENCHMARK(BM_STilde)->Arg(1000)->Arg(100000);

BENCHMARK_MAIN();
