// Copyright (c) 2026, the qvm project developers.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <random>

#include "qvm/hamiltonian_fit.hpp"

namespace {
Eigen::MatrixXcd random_hermitian(Eigen::Index dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist;
    Eigen::MatrixXcd a(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) a(i, j) = {dist(rng), dist(rng)};
    }
    return (a + a.adjoint()) / 2.0;
}

void BM_EvolutionOperator(benchmark::State& state) {
    const Eigen::MatrixXcd h = random_hermitian(state.range(0), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qvm::evolution_operator(h, 0.18));
    }
}
BENCHMARK(BM_EvolutionOperator)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_FitLoss(benchmark::State& state) {
    const Eigen::Index dim = state.range(0);
    const Eigen::MatrixXcd h = random_hermitian(dim, 2);
    const Eigen::MatrixXcd u = qvm::evolution_operator(h, 0.18);
    std::mt19937_64 rng(3);
    std::normal_distribution<double> dist;
    qvm::TrainingSet training;
    for (Eigen::Index i = 0; i < dim * dim; ++i) {
        Eigen::VectorXcd x(dim);
        for (Eigen::Index j = 0; j < dim; ++j) x[j] = {dist(rng), dist(rng)};
        x.normalize();
        training.pairs.emplace_back(qvm::WaveState{x}, qvm::WaveState{u * x});
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(qvm::fit_loss(h, training, 0.18));
    }
}
BENCHMARK(BM_FitLoss)->Arg(2)->Arg(4)->Arg(8);
}  // namespace
