// Serial reference vs OpenMP backend for the enumeration kernels.
//
//   pwitness_bench --benchmark_filter=Minor
//
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "pwitness/kernels.hpp"
#include "pwitness/ratmat.hpp"

using namespace pw;

namespace {

RatMatrix p_like(std::size_t n) {
  // Diagonally dominant, so every minor is positive and the scan cannot stop early.
  std::mt19937_64 eng(n);
  std::uniform_int_distribution<int> d(-2, 2);
  RatMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = i == j ? static_cast<long>(3 * n) : d(eng);
  return m;
}

std::vector<IndexSet::Mask> linear_outmap(std::size_t n) {
  std::vector<IndexSet::Mask> out(std::size_t{1} << n);
  for (IndexSet::Mask a = 0; a < out.size(); ++a) out[a] = ~a & ((IndexSet::Mask{1} << n) - 1);
  return out;
}

Backend backend(const benchmark::State& s) { return s.range(1) ? Backend::OpenMP : Backend::Serial; }

void Minor(benchmark::State& s) {
  const RatMatrix m = p_like(static_cast<std::size_t>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(kernels::first_nonpositive_minor(m, backend(s)));
}

void Signs(benchmark::State& s) {
  const std::size_t n = static_cast<std::size_t>(s.range(0));
  const RatMatrix m = p_like(n);
  RatVector q(n);
  for (std::size_t i = 0; i < n; ++i) q[i] = static_cast<long>(i % 2 ? 1 : -1);
  for (auto _ : s) benchmark::DoNotOptimize(kernels::basis_signs(m, q, backend(s)));
}

void Outmap(benchmark::State& s) {
  const std::size_t n = static_cast<std::size_t>(s.range(0));
  const auto out = linear_outmap(n);
  for (auto _ : s) benchmark::DoNotOptimize(kernels::first_outmap_violation(n, out, backend(s)));
}

void Faces(benchmark::State& s) {
  const std::size_t n = static_cast<std::size_t>(s.range(0));
  const auto out = linear_outmap(n);
  for (auto _ : s) benchmark::DoNotOptimize(kernels::scan_faces(n, out, backend(s)));
}

}  // namespace

BENCHMARK(Minor)->ArgsProduct({{8, 10, 12}, {0, 1}})->ArgNames({"n", "omp"})->Unit(benchmark::kMillisecond);
BENCHMARK(Signs)->ArgsProduct({{6, 8, 10}, {0, 1}})->ArgNames({"n", "omp"})->Unit(benchmark::kMillisecond);
BENCHMARK(Outmap)->ArgsProduct({{8, 10, 12}, {0, 1}})->ArgNames({"n", "omp"})->Unit(benchmark::kMillisecond);
BENCHMARK(Faces)->ArgsProduct({{8, 10, 11}, {0, 1}})->ArgNames({"n", "omp"})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
