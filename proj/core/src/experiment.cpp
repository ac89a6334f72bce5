// Copyright (c) 2026, the qvm project developers.
// SPDX-License-Identifier: Apache-2.0

#include "qvm/experiment.hpp"

#include <numeric>

namespace qvm {

std::vector<GateOp> spacetime_circuit(const SpacetimePlan& plan, bool with_echo_czs) {
    std::vector<int> spatial(static_cast<std::size_t>(plan.n_p));
    std::iota(spatial.begin(), spatial.end(), 0);

    std::vector<GateOp> circuit;
    circuit.push_back(GateOp::dense(plan.prep_unitary, spatial));
    for (int q = plan.n_p; q < plan.n_p + plan.n_t; ++q) {
        circuit.push_back(GateOp::hadamard(q));
    }
    for (int k = 1; k <= plan.n_t; ++k) {
        const int control = plan.n_p + k - 1;
        if (with_echo_czs) {
            circuit.push_back(GateOp::cz(0, control));
            circuit.push_back(GateOp::cz(0, control));
        }
        circuit.push_back(GateOp::dense(plan.f_ladder[static_cast<std::size_t>(k - 1)], spatial)
                              .controlled_by({control}));
    }
    return circuit;
}

double depolarizing_rate_1q(double avg_fidelity) { return 2.0 * (1.0 - avg_fidelity); }

double depolarizing_rate_2q(double avg_fidelity) { return (4.0 / 3.0) * (1.0 - avg_fidelity); }

NoisyRunResult run_noisy_spacetime(const SpacetimePlan& plan, const NoisyRunOptions& options) {
    const int n = plan.n_p + plan.n_t;
    if (n > kMaxDensityQubits) {
        throw DimensionError("run_noisy_spacetime: density-matrix cap is 10 qubits");
    }
    const std::vector<GateOp> circuit = spacetime_circuit(plan, true);

    DensityMatrix averaged;
    if (options.n_twirl_variants > 0) {
        const auto variants =
            pauli_twirl_variants(circuit, options.n_twirl_variants, options.seed);
        for (std::size_t v = 0; v < variants.size(); ++v) {
            const DensityMatrix rho = run_noisy_circuit(variants[v], n, options.model);
            if (v == 0) {
                averaged = rho;
            } else {
                averaged.matrix += rho.matrix;
            }
        }
        averaged.matrix /= static_cast<double>(variants.size());
    } else {
        averaged = run_noisy_circuit(circuit, n, options.model);
    }

    // Readout confusion acts on the measured spatial register only.
    NoiseModel spatial_readout = options.model;
    if (options.model.has_readout_error()) {
        spatial_readout.f0.resize(static_cast<std::size_t>(plan.n_p));
        spatial_readout.f1.resize(static_cast<std::size_t>(plan.n_p));
    }

    NoisyRunResult result;
    const std::size_t n_steps = std::size_t{1} << plan.n_t;
    for (std::size_t i = 0; i < n_steps; ++i) {
        auto [rho_i, prob] = postselect_temporal(averaged, plan.n_p, plan.n_t, i);
        if (options.use_tomography) {
            TomographyOptions tomo;
            tomo.shots_per_basis = options.shots_per_basis;
            tomo.seed = options.seed + 0x51ed2701ULL * (i + 1);
            if (options.readout_error && spatial_readout.has_readout_error()) {
                tomo.readout = &spatial_readout;
            }
            rho_i = tomography(rho_i, tomo);
        }
        auto [psi, eigenvalue] = top_eigenvector(rho_i);
        result.blocks.push_back(std::move(psi));
        result.eigenvalues.push_back(eigenvalue);
        result.branch_probabilities.push_back(prob);
    }
    return result;
}

}  // namespace qvm
