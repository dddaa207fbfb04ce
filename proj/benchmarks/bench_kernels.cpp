#include <benchmark/benchmark.h>

#include <random>

#include "cliffsym/bit_matrix.hpp"
#include "cliffsym/circuit_gen.hpp"
#include "cliffsym/sampler.hpp"
#include "cliffsym/tableau.hpp"

using namespace cliffsym;

namespace {

TiledBitMatrix random_bits(size_t rows, size_t cols, uint64_t seed) {
  std::mt19937_64 rng(seed);
  TiledBitMatrix m(rows, cols);
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < cols; c += 64) {
      uint64_t w = rng();
      for (size_t k = 0; k < 64 && c + k < cols; ++k) {
        if ((w >> k) & 1) m.set_bit(r, c + k, true);
      }
    }
  }
  return m;
}

void BM_ColumnXor(benchmark::State& state) {
  size_t n = state.range(0);
  TiledBitMatrix m = random_bits(n, n, 1);
  std::mt19937_64 rng(2);
  for (auto _ : state) {
    size_t d = rng() % n, s = rng() % n;
    if (d == s) s = (s + 1) % n;
    m.column_op_xor(d, s);
    benchmark::DoNotOptimize(m);
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_ColumnXor)->Arg(512)->Arg(2048)->Arg(8192);

void BM_LocalTranspose(benchmark::State& state) {
  size_t n = state.range(0);
  TiledBitMatrix m = random_bits(n, n, 3);
  for (auto _ : state) {
    m.local_transpose();
    benchmark::DoNotOptimize(m);
  }
  state.SetItemsProcessed(state.iterations() * n * n / 8);
}
BENCHMARK(BM_LocalTranspose)->Arg(512)->Arg(2048)->Arg(4096);

void BM_Gf2Multiply(benchmark::State& state) {
  size_t n = state.range(0);
  TiledBitMatrix a = random_bits(n, n, 4);
  TiledBitMatrix b = random_bits(n, n, 5);
  for (auto _ : state) {
    TiledBitMatrix c = gf2_multiply(a, b);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_Gf2Multiply)->Arg(512)->Arg(1024);

void BM_GateLayer(benchmark::State& state) {
  size_t n = state.range(0);
  SymbolicTableau t(n, 1024);
  for (auto _ : state) {
    for (uint32_t q = 0; q < n; ++q) t.apply_h(q);
    for (uint32_t q = 0; q + n / 2 < n; ++q) t.apply_cnot(q, q + n / 2);
    benchmark::DoNotOptimize(t);
  }
  state.SetItemsProcessed(state.iterations() * (n + n / 2));
}
BENCHMARK(BM_GateLayer)->Arg(128)->Arg(512)->Arg(1024);

void BM_MeasureLayer(benchmark::State& state) {
  size_t n = state.range(0);
  for (auto _ : state) {
    state.PauseTiming();
    SymbolicTableau t(n, 4096);
    SymbolRegistry reg;
    for (uint32_t q = 0; q < n; ++q) t.apply_h(q);
    state.ResumeTiming();
    for (uint32_t q = 0; q < n; ++q) {
      benchmark::DoNotOptimize(t.measure(q, reg));
    }
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_MeasureLayer)->Arg(64)->Arg(256);

void BM_Initialization(benchmark::State& state) {
  size_t n = state.range(0);
  auto circ = generate_bench_circuit(BenchFamily::kDenseCnotDepolarize, n, 99);
  for (auto _ : state) {
    InitResult init = run_initialization(circ);
    benchmark::DoNotOptimize(init);
  }
}
BENCHMARK(BM_Initialization)->Arg(32)->Arg(64)->Arg(128);

void BM_Sampling(benchmark::State& state) {
  size_t n = state.range(0);
  auto circ = generate_bench_circuit(BenchFamily::kDenseCnotDepolarize, n, 99);
  InitResult init = run_initialization(circ);
  for (auto _ : state) {
    SymbolAssignmentBatch batch = draw_assignments(init.registry, 10000, 7);
    SampleMatrix m = sample(init.expressions, batch);
    benchmark::DoNotOptimize(m);
  }
  state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_Sampling)->Arg(32)->Arg(64)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
