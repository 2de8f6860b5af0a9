#include <benchmark/benchmark.h>

#include "tsplit/constructor.hpp"
#include "tsplit/kernel.hpp"

namespace {

using namespace tsplit;

template <class K>
void BM_SplittingScan(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0)), e = static_cast<int>(state.range(1)), n = static_cast<int>(state.range(2));
  K field;
  auto spec = field.spec();
  auto delta = build_delta(generate_example(CurveContext::make(d, e, n, spec), field));
  for (auto _ : state) benchmark::DoNotOptimize(splitting_of_kernel(delta));
}

template <class K>
void BM_KernelMatrix(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0)), e = static_cast<int>(state.range(1)), n = static_cast<int>(state.range(2));
  K field;
  auto spec = field.spec();
  auto delta = build_delta(generate_example(CurveContext::make(d, e, n, spec), field));
  for (auto _ : state) benchmark::DoNotOptimize(kernel_matrix(delta));
}

void BM_GenerateExample(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0)), e = static_cast<int>(state.range(1)), n = static_cast<int>(state.range(2));
  auto spec = FieldSpec::prime_field(kDefaultPrime);
  PrimeField field;
  for (auto _ : state) benchmark::DoNotOptimize(generate_example(CurveContext::make(d, e, n, spec), field));
}

void BM_FullRankCertificate(benchmark::State& state) {
  const int e = static_cast<int>(state.range(0)), n = static_cast<int>(state.range(1));
  auto spec = FieldSpec::prime_field(kDefaultPrime);
  PrimeField field;
  auto k = kernel_matrix(build_delta(generate_example(CurveContext::make(2, e, n, spec), field)));
  for (auto _ : state) benchmark::DoNotOptimize(full_rank_everywhere(k));
}

const std::vector<std::vector<std::int64_t>> kCases{{3, 3, 6}, {3, 6, 9}, {4, 5, 9}, {4, 9, 9}, {6, 11, 11}};

void cases(benchmark::internal::Benchmark* b) {
  for (const auto& c : kCases) b->Args(c);
}

BENCHMARK_TEMPLATE(BM_SplittingScan, PrimeField)->Apply(cases);
BENCHMARK_TEMPLATE(BM_SplittingScan, RationalField)->Apply(cases);
BENCHMARK_TEMPLATE(BM_KernelMatrix, PrimeField)->Apply(cases);
BENCHMARK(BM_GenerateExample)->Apply(cases);
BENCHMARK(BM_FullRankCertificate)->Args({4, 8})->Args({6, 10})->Args({8, 10});

}  // namespace

BENCHMARK_MAIN();
