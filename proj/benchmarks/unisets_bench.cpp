#include <benchmark/benchmark.h>

#include "unisets/rng.hpp"
#include "unisets/subset.hpp"
#include "unisets/universal.hpp"
#include "unisets/verify.hpp"

using namespace unisets;

namespace {

Subset random_subset(const Group& g, std::size_t size, std::uint64_t seed) {
  Rng rng(seed);
  Subset s(g);
  while (s.size() < size) s.insert(static_cast<Element>(rng.uniform(g.order())));
  return s;
}

void BM_ProductSetCyclic(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const Group g = Group::cyclic(n);
  const auto a = random_subset(g, n / 20 + 1, 1);
  const auto b = random_subset(g, n / 20 + 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(product_set(a, b));
}
BENCHMARK(BM_ProductSetCyclic)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_ProductSetSymmetric(benchmark::State& state) {
  const Group g = Group::symmetric(static_cast<std::uint64_t>(state.range(0)));
  const auto a = random_subset(g, 40, 3);
  const auto b = random_subset(g, 40, 4);
  for (auto _ : state) benchmark::DoNotOptimize(product_set(a, b));
}
BENCHMARK(BM_ProductSetSymmetric)->Arg(5)->Arg(7);

void BM_VerifyUniversal(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const auto k = static_cast<unsigned>(state.range(1));
  const auto u = cyclic_universal(n, k).set;
  VerifyOptions opts;
  opts.mode = VerifyMode::exact;
  for (auto _ : state) benchmark::DoNotOptimize(verify_universal(u, k, opts));
}
BENCHMARK(BM_VerifyUniversal)->Args({200, 2})->Args({200, 3})->Args({2000, 2});

void BM_Singer(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  const auto k = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(singer_universal(p, k));
}
BENCHMARK(BM_Singer)->Args({11, 2})->Args({31, 2})->Args({7, 3});

void BM_BinaryTuple(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const auto targets = uniform_targets(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(binary_tuple(n, targets));
}
BENCHMARK(BM_BinaryTuple)->Arg(256)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
