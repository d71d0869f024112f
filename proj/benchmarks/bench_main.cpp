// Hot-loop benchmarks: exact convolution (schoolbook vs Karatsuba split),
// Gaussian polynomial construction cold and warm, KOH sums and sweep
// throughput. Run with --benchmark_filter=... to narrow.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "kohlab/bergeron.hpp"
#include "kohlab/kohdec.hpp"
#include "kohlab/qbinom.hpp"
#include "kohlab/qpoly.hpp"

namespace {

using namespace kohlab;

QPoly random_poly(std::size_t length, unsigned bits, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<BigInt> coeffs(length);
  for (BigInt& c : coeffs) {
    BigInt value = 1;
    for (unsigned chunk = 0; chunk < bits; chunk += 32) {
      value = (value << 32) + static_cast<unsigned long>(rng());
    }
    c = value;
  }
  coeffs.back() += 1;  // keep the intended length after canonicalization
  return QPoly{std::move(coeffs)};
}

void BM_mul_schoolbook(benchmark::State& state) {
  const auto length = static_cast<std::size_t>(state.range(0));
  const QPoly a = random_poly(length, 64, 1);
  const QPoly b = random_poly(length, 64, 2);
  set_karatsuba_threshold(1u << 30);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
  set_karatsuba_threshold(64);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_mul_schoolbook)->RangeMultiplier(2)->Range(32, 1024)->Complexity();

void BM_mul_karatsuba(benchmark::State& state) {
  const auto length = static_cast<std::size_t>(state.range(0));
  const QPoly a = random_poly(length, 64, 1);
  const QPoly b = random_poly(length, 64, 2);
  set_karatsuba_threshold(64);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_mul_karatsuba)->RangeMultiplier(2)->Range(32, 1024)->Complexity();

void BM_mul_threshold(benchmark::State& state) {
  // Fixed size, varying split threshold: the tuning-knob curve.
  const QPoly a = random_poly(512, 128, 3);
  const QPoly b = random_poly(512, 128, 4);
  set_karatsuba_threshold(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
  set_karatsuba_threshold(64);
}
BENCHMARK(BM_mul_threshold)->RangeMultiplier(2)->Range(8, 1024);

void BM_gauss_box_cold(benchmark::State& state) {
  const auto side = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    clear_gauss_cache();
    benchmark::DoNotOptimize(gauss_box(side, side));
  }
}
BENCHMARK(BM_gauss_box_cold)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

void BM_gauss_box_warm(benchmark::State& state) {
  const auto side = static_cast<unsigned>(state.range(0));
  clear_gauss_cache();
  gauss_box(side, side);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gauss_box(side, side));
  }
}
BENCHMARK(BM_gauss_box_warm)->Arg(12)->Arg(20);

void BM_koh_sum(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto n = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(koh_sum(m, n));
  }
}
BENCHMARK(BM_koh_sum)->Args({6, 6})->Args({8, 8})->Args({10, 10});

void BM_sweep(benchmark::State& state) {
  const long long max_product = state.range(0);
  const auto jobs = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    clear_gauss_cache();
    benchmark::DoNotOptimize(sweep(max_product, jobs));
  }
}
BENCHMARK(BM_sweep)->Args({200, 1})->Args({200, 4})->Args({400, 4})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
