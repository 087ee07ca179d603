// Serial vs OpenMP weight distribution and minimum distance on codes of
// 2^11 and 2^21 words.
#include <benchmark/benchmark.h>

#include "addcyc/analysis.hpp"
#include "addcyc/reference.hpp"

using namespace addcyc;

namespace {

HowellBasis binary_row(int row) {
  for (const KnownBinaryCode& k : known_binary_codes())
    if (k.row == row) return embedded_basis(generator_matrix(build_triple(k.spec)));
  throw std::invalid_argument("no such row");
}

// Z_2 Z_2 Z_4 code at (7,7,7) with A = B = x+1 and the G chain
// ((x-1) h, x-1) for a cubic factor h of x^7-1: 2^21 words.
HowellBasis large_mixed() {
  MixedParams mp(2, 1, 2, 7, 7, 7);
  RingSpec z2 = mp.ring_r(), z4 = mp.ring_s();
  const auto& lifts = lifted_factorization(7, z4).lifts;
  TripleCode c = build_triple({mp, {Poly(z2, {1, 1})}, Poly(z2), {Poly(z2, {1, 1})}, Poly(z2), Poly(z2),
                               {lifts[0] * lifts[1], lifts[0]}});
  return embedded_basis(generator_matrix(c));
}

const HowellBasis& basis(int which) {
  static const HowellBasis row5 = binary_row(5);
  static const HowellBasis mixed = large_mixed();
  return which == 0 ? row5 : mixed;
}

void BM_WeightsSerial(benchmark::State& state) {
  const HowellBasis& b = basis(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(weight_distribution_serial(b, u64(1) << 22));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(u64(1) << b.log_size()));
}

void BM_WeightsParallel(benchmark::State& state) {
  const HowellBasis& b = basis(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(weight_distribution_parallel(b, u64(1) << 22));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(u64(1) << b.log_size()));
}

void BM_MinWeightSerial(benchmark::State& state) {
  const HowellBasis& b = basis(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(min_weight_serial(b, u64(1) << 22));
}

void BM_MinWeightParallel(benchmark::State& state) {
  const HowellBasis& b = basis(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(min_weight_parallel(b, u64(1) << 22));
}

}  // namespace

BENCHMARK(BM_WeightsSerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_WeightsParallel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MinWeightSerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MinWeightParallel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
