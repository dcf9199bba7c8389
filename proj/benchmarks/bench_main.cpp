#include <benchmark/benchmark.h>

#include "icc/cover.hpp"
#include "icc/entropy.hpp"
#include "icc/language.hpp"
#include "icc/sofic.hpp"
#include "icc/wang.hpp"

using namespace icc;

static void BM_EntropyFullShift(benchmark::State& state) {
  const SftPresentation s = full_shift(Alphabet::digits(static_cast<std::size_t>(state.range(0)))).recode(3);
  for (auto _ : state) benchmark::DoNotOptimize(entropy(s).bits());
}
BENCHMARK(BM_EntropyFullShift)->Arg(2)->Arg(4)->Arg(6);

static void BM_CountWords(benchmark::State& state) {
  const SftPresentation s = golden_mean_shift();
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_words(s, n));
}
BENCHMARK(BM_CountWords)->Arg(64)->Arg(512);

static void BM_ExactCoverNeq(benchmark::State& state) {
  const RelationMatrix r = RelationMatrix::neq(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cover_number_exact(r).cover_number);
}
BENCHMARK(BM_ExactCoverNeq)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_FractionalCover(benchmark::State& state) {
  const RelationMatrix r = tensor_power(RelationMatrix::neq(1), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fractional_cover(r, 1e-3).value);
}
BENCHMARK(BM_FractionalCover)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_WangPatterns(benchmark::State& state) {
  const TileSet t = paper_tileset();
  const int side = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_patterns(t, side, side, 2).size());
}
BENCHMARK(BM_WangPatterns)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_SoficEqualRecoded(benchmark::State& state) {
  const SoficPresentation a = even_shift();
  const SoficPresentation b = sofic_from_sft(golden_mean_shift().recode(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(sofic_equal(a, b));
}
BENCHMARK(BM_SoficEqualRecoded)->Arg(2)->Arg(6);

static void BM_Residuals(benchmark::State& state) {
  const LanguageOracle o = counterexample_oracle();
  for (auto _ : state) benchmark::DoNotOptimize(residual_profile_count(o, 8, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Residuals)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
