// Serial reference vs OpenMP kernels. GI_THREADS caps the parallel side.

#include <benchmark/benchmark.h>

#include <random>

#include "gi/dictionary.hpp"
#include "gi/kernels.hpp"

namespace {

gi::Matrix random_matrix(gi::Index rows, gi::Index cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  gi::Matrix m(rows, cols);
  for (gi::Index j = 0; j < cols; ++j)
    for (gi::Index i = 0; i < rows; ++i) m(i, j) = normal(rng);
  return m;
}

// 64 x 256 dictionary, signals that are 4-sparse in it
struct Problem {
  gi::Matrix d;
  gi::Matrix signals;
  explicit Problem(gi::Index count) : d(random_matrix(64, 256, 1)), signals(64, count) {
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<gi::Index> pick(0, d.cols() - 1);
    std::normal_distribution<double> normal;
    for (gi::Index j = 0; j < count; ++j) {
      signals.col(j).setZero();
      for (int k = 0; k < 4; ++k) signals.col(j) += normal(rng) * d.col(pick(rng));
    }
  }
};

void BM_sparse_code_serial(benchmark::State& state) {
  const Problem p(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gi::kernels::sparse_code_batch_serial(p.d, p.signals, 8));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_sparse_code_parallel(benchmark::State& state) {
  gi::kernels::apply_thread_limit();
  const Problem p(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gi::kernels::sparse_code_batch(p.d, p.signals, 8));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_coherence_serial(benchmark::State& state) {
  const auto d = random_matrix(state.range(0), 2 * state.range(0), 3);
  for (auto _ : state) benchmark::DoNotOptimize(gi::kernels::mutual_coherence_serial(d));
}

void BM_coherence_parallel(benchmark::State& state) {
  gi::kernels::apply_thread_limit();
  const auto d = random_matrix(state.range(0), 2 * state.range(0), 3);
  for (auto _ : state) benchmark::DoNotOptimize(gi::kernels::mutual_coherence(d));
}

}  // namespace

BENCHMARK(BM_sparse_code_serial)->Arg(256)->Arg(2048)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sparse_code_parallel)->Arg(256)->Arg(2048)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_coherence_serial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_coherence_parallel)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
