#include <benchmark/benchmark.h>

#include "pentagram/linalg.hpp"
#include "pentagram/maps.hpp"
#include "pentagram/spectral.hpp"

namespace pentagram {
namespace {

// Args: {d, n}.
void BM_ApplyDented(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const CoefficientArray p = random_generic_polygon(d, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(apply_map(p, MapSpec::dented(1)));
}
BENCHMARK(BM_ApplyDented)->Args({2, 5})->Args({3, 7})->Args({3, 9})->Args({4, 9})->Unit(benchmark::kMicrosecond);

void BM_CorrugatedMap(benchmark::State& state) {
  const CoefficientArray p = random_corrugated_polygon(static_cast<int>(state.range(0)), 9, 1);
  for (auto _ : state) benchmark::DoNotOptimize(corrugated_map(p));
}
BENCHMARK(BM_CorrugatedMap)->Arg(3)->Arg(4)->Unit(benchmark::kMicrosecond);

void BM_SpectralFunction(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const CoefficientArray p = random_generic_polygon(d, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(spectral_function(p, LaxVariant::dented(1)));
}
BENCHMARK(BM_SpectralFunction)->Args({3, 5})->Args({3, 9})->Args({4, 9})->Unit(benchmark::kMicrosecond);

// Genus includes the discriminant in k, the dominant cost of `spectrum`.
void BM_Genus(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const LaurentBivariate r = spectral_function(random_generic_polygon(3, n, 1), LaxVariant::dented(1));
  for (auto _ : state) benchmark::DoNotOptimize(genus(r));
}
BENCHMARK(BM_Genus)->Arg(5)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_Determinant(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  QMatrix m(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) m(i, j) = Scalar(static_cast<long>((7 * i + 3 * j * j + 1) % 11) - 5, static_cast<long>(j + 1));
  for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(BM_Determinant)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace pentagram

// The packaged benchmark_main archive carries LTO bytecode from another gcc.
BENCHMARK_MAIN();
