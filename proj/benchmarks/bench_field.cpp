#include <benchmark/benchmark.h>

#include "qecc/field.hpp"

using namespace qecc;

static void BM_field_mul(benchmark::State& state) {
  Field f = Field::of_order(std::uint32_t(state.range(0)));
  felem a = 1, b = f.order() - 1;
  for (auto _ : state) {
    a = f.mul(a, b);
    a = f.add(a, 1);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_field_mul)->Arg(9)->Arg(25)->Arg(8192);

static void BM_field_inv(benchmark::State& state) {
  Field f = Field::of_order(std::uint32_t(state.range(0)));
  felem a = 1;
  for (auto _ : state) {
    a = f.inv(a);
    a = f.add(a, 1);
    if (a == 0) a = 1;
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_field_inv)->Arg(9)->Arg(25);

static void BM_field_build(benchmark::State& state) {
  for (auto _ : state) {
    Field f = Field::make(3, 2);
    benchmark::DoNotOptimize(f.order());
  }
}
BENCHMARK(BM_field_build);
