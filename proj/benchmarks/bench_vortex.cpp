// Copyright (c) 2026, the qvm project developers.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <random>

#include "qvm/vortex.hpp"

namespace {
qvm::VortexSystem random_system(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    qvm::VortexSystem system;
    for (std::size_t j = 0; j < n; ++j) {
        system.positions.emplace_back(coord(rng), coord(rng));
        system.strengths.push_back(0.3 + 0.5 * std::abs(coord(rng)));
    }
    return system;
}

void BM_BiotSavartSum(benchmark::State& state) {
    const auto system = random_system(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) {
        for (std::size_t j = 0; j < system.count(); ++j) {
            benchmark::DoNotOptimize(
                qvm::induced_velocity(system, system.positions[j], j));
        }
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BiotSavartSum)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_IntegrateLeapfrog(benchmark::State& state) {
    const qvm::VortexSystem system{{{0.0, 1.0}, {0.0, 0.3}, {0.0, -1.0}, {0.0, -0.3}},
                                   {1.0, 1.0, -1.0, -1.0}};
    const auto n_steps = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qvm::integrate(system, 0.01, n_steps));
    }
}
BENCHMARK(BM_IntegrateLeapfrog)->Arg(100)->Arg(1000);
}  // namespace

BENCHMARK_MAIN();
