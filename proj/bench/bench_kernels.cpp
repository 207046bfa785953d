// Serial reference kernels against their OpenMP counterparts.
// OMP_NUM_THREADS controls the parallel width.

#include <benchmark/benchmark.h>

#include <random>

#include "galoisazu/fixtures.hpp"
#include "galoisazu/matrix.hpp"

using namespace galoisazu;

namespace {

Matrix random_matrix(const FieldPtr& F, std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
  Matrix m(F, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = F->from_rational(mpq_class(num(rng), den(rng)));
  return m;
}

FieldPtr field_for(std::int64_t which) { return which == 0 ? Field::rationals() : Field::prime(10007); }

template <bool Par>
void BM_Matmul(benchmark::State& state) {
  const auto F = field_for(state.range(1));
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_matrix(F, n, 1), b = random_matrix(F, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Par ? omp::matmul(a, b) : serial::matmul(a, b));
}

template <bool Par>
void BM_Inverse(benchmark::State& state) {
  const auto F = field_for(state.range(1));
  const auto m = random_matrix(F, static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(Par ? omp::inverse(m) : serial::inverse(m));
}

template <bool Par>
void BM_Rank(benchmark::State& state) {
  const auto F = field_for(state.range(1));
  const auto m = random_matrix(F, static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(Par ? omp::rank(m) : serial::rank(m));
}

template <bool Par>
void BM_Kron(benchmark::State& state) {
  const auto F = field_for(state.range(1));
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_matrix(F, n, 5), b = random_matrix(F, n, 6);
  for (auto _ : state) benchmark::DoNotOptimize(Par ? omp::kron(a, b) : serial::kron(a, b));
}

// Inverting Gamma dominates certification of the tensor-square fixture.
template <bool Par>
void BM_TensorSquareGamma(benchmark::State& state) {
  const auto cert = certify_fixture(fixture("tensor-square"));
  for (auto _ : state) benchmark::DoNotOptimize(Par ? omp::inverse(cert.gamma) : serial::inverse(cert.gamma));
}

void sizes(benchmark::internal::Benchmark* b) {
  for (long field : {0L, 1L})
    for (long n : {16L, 32L, 64L}) b->Args({n, field});
  b->ArgNames({"n", "field"})->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_Matmul<false>)->Name("matmul/serial")->Apply(sizes);
BENCHMARK(BM_Matmul<true>)->Name("matmul/omp")->Apply(sizes);
BENCHMARK(BM_Inverse<false>)->Name("inverse/serial")->Apply(sizes);
BENCHMARK(BM_Inverse<true>)->Name("inverse/omp")->Apply(sizes);
BENCHMARK(BM_Rank<false>)->Name("rank/serial")->Apply(sizes);
BENCHMARK(BM_Rank<true>)->Name("rank/omp")->Apply(sizes);
BENCHMARK(BM_Kron<false>)->Name("kron/serial")->Args({8, 0})->Args({8, 1})->ArgNames({"n", "field"})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Kron<true>)->Name("kron/omp")->Args({8, 0})->Args({8, 1})->ArgNames({"n", "field"})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TensorSquareGamma<false>)->Name("tensor_square_gamma_inverse/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TensorSquareGamma<true>)->Name("tensor_square_gamma_inverse/omp")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
