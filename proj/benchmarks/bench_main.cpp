#include <benchmark/benchmark.h>

#include "sgcanon/encode.hpp"
#include "sgcanon/generators.hpp"
#include "sgcanon/labelling.hpp"
#include "sgcanon/refine.hpp"

namespace {

using namespace sgcanon;

void bm_encode_random(benchmark::State& state) {
  const SiteGraph s =
      make_random_site_graph(static_cast<int>(state.range(0)), 3, 4, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(encode(s));
  }
}
BENCHMARK(bm_encode_random)->Arg(16)->Arg(64)->Arg(256);

void bm_pairwise_cycle(benchmark::State& state) {
  const ColouredGraph g = make_cycle(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(canon_pairwise(g));
  }
}
BENCHMARK(bm_pairwise_cycle)->Arg(16)->Arg(64)->Arg(256);

void bm_parallel_cycle(benchmark::State& state) {
  const ColouredGraph g = make_cycle(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(canon_parallel(g));
  }
}
BENCHMARK(bm_parallel_cycle)->Arg(16)->Arg(64)->Arg(256);

void bm_refined_tree(benchmark::State& state) {
  const ColouredGraph g =
      make_tree(static_cast<int>(state.range(0)), 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(canon_combined(g));
  }
}
BENCHMARK(bm_refined_tree)->Arg(256)->Arg(1024)->Arg(4096)->Arg(16384);

void bm_hopcroft_tree(benchmark::State& state) {
  const ColouredGraph g =
      make_tree(static_cast<int>(state.range(0)), 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hopcroft_extended(g));
  }
}
BENCHMARK(bm_hopcroft_tree)->Arg(256)->Arg(1024)->Arg(4096)->Arg(16384);

}  // namespace

BENCHMARK_MAIN();
