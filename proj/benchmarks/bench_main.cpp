#include "fanfree/constructions.hpp"
#include "fanfree/crossings.hpp"
#include "fanfree/decompose.hpp"
#include "fanfree/star.hpp"

#include <benchmark/benchmark.h>

using namespace fanfree;

static void bm_compute_crossings(benchmark::State& state) {
  const auto d = gen_straight_extremal(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compute_crossings(d));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_compute_crossings)->Arg(15)->Arg(30)->Arg(60)->Complexity();

static void bm_find_k_fans_grid(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto d = gen_grid(10, k);
  const auto c = compute_crossings(d);
  for (auto _ : state) benchmark::DoNotOptimize(find_k_fans(d.graph, c, k));
}
BENCHMARK(bm_find_k_fans_grid)->Arg(3)->Arg(5);

static void bm_star_search(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(max_arrows(m, 2, SearchFilter::all(), {2'000'000'000ULL, 1}));
}
BENCHMARK(bm_star_search)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

static void bm_star_base_cases(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_base_cases(3, {2'000'000'000ULL, 1}));
}
BENCHMARK(bm_star_base_cases)->Unit(benchmark::kMillisecond);

static void bm_audit_straight(benchmark::State& state) {
  const auto d = gen_straight_extremal(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(audit(d, 2));
}
BENCHMARK(bm_audit_straight)->Arg(20)->Arg(60)->Unit(benchmark::kMillisecond);

static void bm_audit_quad(benchmark::State& state) {
  const auto d = gen_quad_extremal(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(audit(d, 2));
}
BENCHMARK(bm_audit_quad)->Arg(20)->Arg(60)->Unit(benchmark::kMillisecond);

static void bm_gen_kq(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gen_kq_subdivision(static_cast<int>(state.range(0))));
}
BENCHMARK(bm_gen_kq)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
