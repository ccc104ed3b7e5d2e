// Serial against OpenMP paths of the batch kernels.

#include <benchmark/benchmark.h>

#include "prelie/anticyclic.hpp"
#include "prelie/kernels.hpp"
#include "prelie/operad.hpp"

using namespace prelie;

namespace {

Exec mode(const benchmark::State& st) { return st.range(1) ? Exec::parallel : Exec::serial; }

void BM_EnumerateTrees(benchmark::State& st) {
  const auto labels = standard_labels(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) {
    auto trees = mode(st) == Exec::parallel ? enumerate_trees(labels) : enumerate_trees_serial(labels);
    benchmark::DoNotOptimize(trees.data());
  }
}

void BM_IndecSpace(benchmark::State& st) {
  const auto labels = standard_labels(static_cast<std::size_t>(st.range(0)));
  set_default_exec(mode(st));
  for (auto _ : st) {
    IndecSpace s(labels);
    benchmark::DoNotOptimize(s.image_rank());
  }
  set_default_exec(Exec::parallel);
}

void BM_KpOracle(benchmark::State& st) {
  const auto labels = standard_labels(static_cast<std::size_t>(st.range(0)));
  set_default_exec(mode(st));
  for (auto _ : st) {
    auto span = kp_oracle(labels);
    benchmark::DoNotOptimize(span.rank());
  }
  set_default_exec(Exec::parallel);
}

void BM_Delta2Batch(benchmark::State& st) {
  const auto basis = wedge_basis(standard_labels(static_cast<std::size_t>(st.range(0))));
  const Exec ex = mode(st);
  for (auto _ : st) {
    auto out = map_kernel(basis, [](const Wedge& w) { return delta2(WedgeVector(w)); }, ex);
    benchmark::DoNotOptimize(out.data());
  }
}

}  // namespace

BENCHMARK(BM_EnumerateTrees)->ArgsProduct({{6, 7}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Delta2Batch)->ArgsProduct({{5}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IndecSpace)->ArgsProduct({{4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KpOracle)->ArgsProduct({{4}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
