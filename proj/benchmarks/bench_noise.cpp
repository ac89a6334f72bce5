// Copyright (c) 2026, the qvm project developers.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <random>

#include "qvm/noise.hpp"

namespace {
qvm::DensityMatrix random_pure(int n_qubits, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist;
    Eigen::VectorXcd v(Eigen::Index{1} << n_qubits);
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = {dist(rng), dist(rng)};
    v.normalize();
    return qvm::DensityMatrix::pure(qvm::StateVector{v, n_qubits});
}

void BM_DepolarizingChannel(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const qvm::DensityMatrix rho = random_pure(n, 1);
    qvm::NoiseModel model;
    model.p2 = 0.0032;
    const qvm::GateOp op = qvm::GateOp::cz(0, n - 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qvm::apply_channel(rho, op, model));
    }
}
BENCHMARK(BM_DepolarizingChannel)->DenseRange(4, 8, 2);

void BM_Tomography(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const qvm::DensityMatrix rho = random_pure(n, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qvm::tomography(rho));
    }
}
BENCHMARK(BM_Tomography)->Arg(1)->Arg(2)->Arg(3);

void BM_TopEigenvector(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    qvm::DensityMatrix rho = random_pure(n, 3);
    const double p = 0.05;
    rho.matrix = (1.0 - p) * rho.matrix +
                 p / static_cast<double>(rho.matrix.rows()) *
                     Eigen::MatrixXcd::Identity(rho.matrix.rows(), rho.matrix.cols());
    for (auto _ : state) {
        benchmark::DoNotOptimize(qvm::top_eigenvector(rho));
    }
}
BENCHMARK(BM_TopEigenvector)->DenseRange(2, 8, 2);
}  // namespace
