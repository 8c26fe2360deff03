#include <benchmark/benchmark.h>

#include "qecc/poly.hpp"

using namespace qecc;

static void BM_factor_xn_minus_1(benchmark::State& state) {
  Field f = Field::of_order(std::uint32_t(state.range(0)));
  std::uint32_t n = std::uint32_t(state.range(1));
  Poly mod = Poly::x_pow_minus(f, n, 1);
  for (auto _ : state) {
    auto fact = factorize(mod, 7);
    benchmark::DoNotOptimize(fact.factors.size());
  }
}
BENCHMARK(BM_factor_xn_minus_1)->Args({11, 19})->Args({5, 60})->Args({2, 90})->Args({5, 120});

static void BM_poly_mul(benchmark::State& state) {
  Field f = Field::of_order(7);
  std::vector<felem> c(std::size_t(state.range(0)), 3);
  c.back() = 1;
  Poly p(f, c);
  for (auto _ : state) {
    Poly q = p * p;
    benchmark::DoNotOptimize(q.degree());
  }
}
BENCHMARK(BM_poly_mul)->Arg(32)->Arg(128);
