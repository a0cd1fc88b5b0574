#include <benchmark/benchmark.h>

#include <vector>

#include "wrr/bn_engine.hpp"
#include "wrr/jacobian.hpp"
#include "wrr/random_instances.hpp"
#include "wrr/scaling.hpp"

namespace {

using namespace wrr;

struct Instance {
  WeightedGraph graph;
  Divisor divisor;
};

std::vector<Instance> corpus(std::size_t n, std::int64_t max_den, std::size_t count) {
  InstanceRng rng(7 + n);
  std::vector<Instance> out;
  for (std::size_t i = 0; i < count; ++i) {
    WeightedGraph g = random_connected_graph(rng, {n, 10, max_den, 3});
    Divisor d = random_divisor(rng, n, 5, max_den);
    out.push_back({std::move(g), std::move(d)});
  }
  return out;
}

void BM_RiemannRochReport(benchmark::State& state) {
  const auto instances = corpus(static_cast<std::size_t>(state.range(0)), 10, 16);
  std::size_t i = 0;
  for (auto _ : state) {
    const Instance& inst = instances[i++ % instances.size()];
    benchmark::DoNotOptimize(rr_report(inst.graph, inst.divisor));
  }
}
BENCHMARK(BM_RiemannRochReport)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_H0Integer(benchmark::State& state) {
  const auto instances = corpus(static_cast<std::size_t>(state.range(0)), 1, 16);
  std::size_t i = 0;
  for (auto _ : state) {
    const Instance& inst = instances[i++ % instances.size()];
    benchmark::DoNotOptimize(h0(inst.graph, inst.divisor));
  }
}
BENCHMARK(BM_H0Integer)->DenseRange(2, 6)->Unit(benchmark::kMicrosecond);

void BM_QReduce(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  InstanceRng rng(3);
  const Multigraph m = to_multigraph(random_connected_graph(rng, {n, 5, 1, 2}));
  std::vector<IntDivisor> divisors;
  for (int i = 0; i < 64; ++i) divisors.push_back(to_int_divisor(random_divisor(rng, n, 1000, 1)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(q_reduce(m, divisors[i++ % divisors.size()], n - 1));
}
BENCHMARK(BM_QReduce)->RangeMultiplier(2)->Range(4, 32);

void BM_Jacobian(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  InstanceRng rng(5);
  const WeightedGraph g = random_connected_graph(rng, {n, 5, 1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(jacobian(g));
}
BENCHMARK(BM_Jacobian)->RangeMultiplier(2)->Range(4, 32);

}  // namespace
BENCHMARK_MAIN();
