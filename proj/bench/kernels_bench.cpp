#include <benchmark/benchmark.h>

#include <random>

#include "wpb/codes.hpp"
#include "wpb/isometry.hpp"
#include "wpb/reference.hpp"

namespace {

using namespace wpb;

// V-shaped poset 1 < 3 > 2 with k = (2, 1, 2) over Z_5, Lee weight: 5^5 vectors.
Space bench_space() {
  static const Space space = [] {
    const Alphabet a(5);
    return SpaceContext::make(Poset::from_cover_relations(3, {{1, 3}, {2, 3}}), Labeling({2, 1, 2}), a, lee_weight(a));
  }();
  return space;
}

Code bench_code() {
  std::mt19937_64 rng(7);
  return random_code(bench_space(), 12, rng);
}

void BM_ball_parallel(benchmark::State& st) {
  const auto c = bench_space()->from_index(1234);
  for (auto _ : st) benchmark::DoNotOptimize(ball(c, 6));
}
void BM_ball_serial(benchmark::State& st) {
  const auto c = bench_space()->from_index(1234);
  for (auto _ : st) benchmark::DoNotOptimize(reference::ball(c, 6));
}

void BM_weight_table_parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(weight_table(*bench_space()));
}
void BM_weight_table_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(reference::weight_table(*bench_space()));
}

void BM_packing_radius_parallel(benchmark::State& st) {
  const Code c = bench_code();
  for (auto _ : st) benchmark::DoNotOptimize(packing_radius(c));
}
void BM_packing_radius_serial(benchmark::State& st) {
  const Code c = bench_code();
  for (auto _ : st) benchmark::DoNotOptimize(reference::packing_radius(c));
}

void BM_is_isometry_parallel(benchmark::State& st) {
  const auto t = BlockMatrix::identity(bench_space());
  for (auto _ : st) benchmark::DoNotOptimize(is_isometry(t));
}
void BM_is_isometry_serial(benchmark::State& st) {
  const auto t = BlockMatrix::identity(bench_space());
  for (auto _ : st) benchmark::DoNotOptimize(reference::is_isometry(t));
}

// Group enumeration on the V-poset with k = (1,1,1) over Z_2: 2^9 matrices.
Space small_space() {
  static const Space space = [] {
    const Alphabet a(2);
    return SpaceContext::make(Poset::from_cover_relations(3, {{1, 3}, {2, 3}}), Labeling::uniform(3), a, hamming_weight(a));
  }();
  return space;
}

void BM_group_pruned(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_isometry_group(small_space()));
}
void BM_group_exhaustive_parallel(benchmark::State& st) {
  EnumerationOptions opts;
  opts.exhaustive = true;
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_isometry_group(small_space(), opts));
}
void BM_group_exhaustive_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(reference::enumerate_isometry_group(small_space()));
}

}  // namespace

BENCHMARK(BM_ball_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ball_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_weight_table_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_weight_table_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_packing_radius_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_packing_radius_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_is_isometry_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_is_isometry_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_group_pruned)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_group_exhaustive_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_group_exhaustive_serial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
