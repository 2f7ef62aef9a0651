// Copyright (c) the entangle contributors.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "entangle/entangle.hpp"

using namespace entangle;

namespace {

BipartiteState random_state(Index da, Index db) {
  Rng rng(static_cast<std::uint64_t>(da * 1000 + db));
  return rng.state(da, db);
}

void BM_Schmidt(benchmark::State& state) {
  const Index dim = state.range(0);
  const BipartiteState psi = random_state(dim, dim);
  for (auto _ : state) {
    benchmark::DoNotOptimize(schmidt(psi));
  }
}
BENCHMARK(BM_Schmidt)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_PartialTraceB(benchmark::State& state) {
  const Index dim = state.range(0);
  Rng rng(11);
  const Matrix op = rng.matrix(dim * dim, dim * dim);
  for (auto _ : state) {
    benchmark::DoNotOptimize(partial_trace_b(op, dim, dim));
  }
}
BENCHMARK(BM_PartialTraceB)->Arg(4)->Arg(8)->Arg(16);

void BM_CorrelationOperator(benchmark::State& state) {
  const Index dim = state.range(0);
  const BipartiteState psi = random_state(dim, dim);
  for (auto _ : state) {
    benchmark::DoNotOptimize(correlation_operator(psi));
  }
}
BENCHMARK(BM_CorrelationOperator)->Arg(4)->Arg(8)->Arg(16);

void BM_Steer(benchmark::State& state) {
  const Index dim = state.range(0);
  const BipartiteState psi = random_state(dim, dim);
  Rng rng(13);
  const Vector n_bar = rng.unit_vector(dim);
  for (auto _ : state) {
    benchmark::DoNotOptimize(steer(psi, n_bar));
  }
}
BENCHMARK(BM_Steer)->Arg(4)->Arg(8)->Arg(16);

void BM_TwinDetection(benchmark::State& state) {
  const Index dim = state.range(0);
  const BipartiteState psi = random_state(dim, dim);
  Rng rng(17);
  const EigenSystem sys = hermitian_eig(reduced_rho_b(psi));
  Matrix o = Matrix::Zero(dim, dim);
  for (Index n = 0; n < dim; ++n) {
    o += static_cast<double>(rng.uniform_int(1, 3)) * sys.vectors.col(n) *
         sys.vectors.col(n).adjoint();
  }
  const Observable o_b = Observable::from_matrix(o);
  const Observable o_a = construct_twin(psi, o_b);
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_twin_pair(psi, o_a, o_b));
  }
}
BENCHMARK(BM_TwinDetection)->Arg(4)->Arg(8);

void BM_SelfCheckSuite(benchmark::State& state) {
  SelfCheckOptions opts;
  opts.dim_a = 3;
  opts.dim_b = 4;
  opts.trials = 10;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_selfcheck(opts));
  }
}
BENCHMARK(BM_SelfCheckSuite)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
