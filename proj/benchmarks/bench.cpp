#include <benchmark/benchmark.h>

#include "tcplex/category.hpp"
#include "tcplex/collapse.hpp"
#include "tcplex/complex.hpp"
#include "tcplex/contiguity.hpp"
#include "tcplex/tc.hpp"

using namespace tcplex;

static void BM_product_build(benchmark::State& state) {
  auto K = gen_circle(int(state.range(0)));
  for (auto _ : state) {
    auto P = categorical_product(K, K);
    benchmark::DoNotOptimize(P);
  }
}
BENCHMARK(BM_product_build)->Arg(4)->Arg(8)->Arg(16);

static void BM_core_of(benchmark::State& state) {
  // A simplex with a long tail of expansions: every vertex folds away.
  auto K = gen_simplex(2);
  for (int i = 0; i < int(state.range(0)); ++i)
    K = strong_expand(K, {"v0", "v1"}, "e" + std::to_string(i));
  for (auto _ : state) {
    auto t = core_of(K);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_core_of)->Arg(4)->Arg(16);

static void BM_component_scan(benchmark::State& state) {
  auto K = gen_boundary(2);
  auto P = categorical_product(K, K);
  for (auto _ : state) {
    ComponentScan scan(constant_map(P, P, 0));
    auto out = scan.run(nullptr, 1'000'000, 1);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_component_scan);

static void BM_scat_wedge(benchmark::State& state) {
  auto K = gen_wedge(std::vector<int>(size_t(state.range(0)), 3));
  for (auto _ : state) {
    auto r = scat(K);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_scat_wedge)->Arg(1)->Arg(2);

static void BM_tc_targeted_intro(benchmark::State& state) {
  auto K = gen_boundary(2);
  auto L = Subcomplex::from_labels(K, "path", {{"v0", "v1"}, {"v1", "v2"}});
  for (auto _ : state) {
    auto r = tc_targeted(K, L);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_tc_targeted_intro);

static void BM_tc_targeted_wedge(benchmark::State& state) {
  auto K = gen_wedge({4, 3});
  auto L = Subcomplex::from_labels(
      K, "circle3", {{"w", "c2_1"}, {"c2_1", "c2_2"}, {"c2_2", "w"}});
  for (auto _ : state) {
    auto r = tc_targeted(K, L);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_tc_targeted_wedge);

BENCHMARK_MAIN();
