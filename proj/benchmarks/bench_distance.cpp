#include <benchmark/benchmark.h>

#include "qecc/code.hpp"
#include "qecc/notation.hpp"

using namespace qecc;

static void BM_min_distance_parity_binary(benchmark::State& state) {
  Field f2 = Field::of_order(2);
  Poly g = parse_poly("1010100010001", f2);
  for (auto _ : state) {
    LinearCode c = cyclic_code(42, g); // fresh code: no cached distance
    DistanceBudget b;
    b.force_strategy = 2;
    auto d = min_distance(c, b);
    benchmark::DoNotOptimize(d.lo);
  }
}
BENCHMARK(BM_min_distance_parity_binary)->Unit(benchmark::kMillisecond);

static void BM_min_distance_enumeration(benchmark::State& state) {
  Field f11 = Field::of_order(11);
  Poly g = parse_poly("1 6 A15A", f11);
  for (auto _ : state) {
    LinearCode c = cyclic_code(11, g); // [11,6,6]: 11^6 messages
    DistanceBudget b;
    b.force_strategy = 1;
    auto d = min_distance(c, b);
    benchmark::DoNotOptimize(d.lo);
  }
}
BENCHMARK(BM_min_distance_enumeration)->Unit(benchmark::kMillisecond);

static void BM_rref(benchmark::State& state) {
  Field f5 = Field::of_order(5);
  std::size_t n = std::size_t(state.range(0));
  Mat m(f5, n / 2, n);
  std::uint64_t x = 88172645463325252ull;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < n; ++c) {
      x ^= x << 13; x ^= x >> 7; x ^= x << 17;
      m.at(r, c) = felem(x % 5);
    }
  for (auto _ : state) {
    auto rr = rref(m);
    benchmark::DoNotOptimize(rr.rank);
  }
}
BENCHMARK(BM_rref)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);
