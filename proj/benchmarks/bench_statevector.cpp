// Copyright (c) 2026, the qvm project developers.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <random>

#include "qvm/spacetime.hpp"
#include "qvm/statevector.hpp"

namespace {
Eigen::MatrixXcd random_unitary(Eigen::Index dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist;
    Eigen::MatrixXcd a(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) a(i, j) = {dist(rng), dist(rng)};
    }
    return Eigen::HouseholderQR<Eigen::MatrixXcd>(a).householderQ();
}

void BM_ApplyHadamard(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    qvm::StateVector s = qvm::StateVector::zero(n);
    for (auto _ : state) {
        s = qvm::apply(s, qvm::GateOp::hadamard(n / 2));
        benchmark::DoNotOptimize(s.amplitudes.data());
    }
}
BENCHMARK(BM_ApplyHadamard)->DenseRange(8, 14, 2);

void BM_ApplyControlledDense(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    qvm::StateVector s = qvm::StateVector::zero(n);
    s = qvm::apply(s, qvm::GateOp::hadamard(n - 1));
    const qvm::GateOp op =
        qvm::GateOp::dense(random_unitary(8, 3), {0, 1, 2}).controlled_by({n - 1});
    for (auto _ : state) {
        s = qvm::apply(s, op);
        benchmark::DoNotOptimize(s.amplitudes.data());
    }
}
BENCHMARK(BM_ApplyControlledDense)->DenseRange(8, 14, 2);

void BM_SpacetimeRun(benchmark::State& state) {
    const int n_t = static_cast<int>(state.range(0));
    const qvm::SpacetimePlan plan = qvm::build_plan(
        n_t, qvm::WaveState{random_unitary(8, 5).col(0)}, random_unitary(8, 7));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qvm::run(plan));
    }
}
BENCHMARK(BM_SpacetimeRun)->DenseRange(3, 9, 2);
}  // namespace
