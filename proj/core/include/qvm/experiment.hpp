// Copyright (c) 2026, the qvm project developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "qvm/noise.hpp"
#include "qvm/spacetime.hpp"

namespace qvm {

/// Gate list realizing a SpacetimePlan: dense prep on the spatial qubits,
/// Hadamards on the temporal register, then the controlled-F_k ladder.
/// With `with_echo_czs`, every controlled-F_k is preceded by a pair of
/// ideally cancelling CZs between its control and spatial qubit 0 — a
/// stand-in for the two-qubit compilation overhead of the controlled
/// unitaries, and the hook the Pauli twirl randomizes over.
std::vector<GateOp> spacetime_circuit(const SpacetimePlan& plan, bool with_echo_czs = false);

struct NoisyRunOptions {
    NoiseModel model;
    int n_twirl_variants = 50;
    std::uint64_t seed = 0;
    /// Reconstruct each post-selected block through state tomography before
    /// extracting the dominant eigenvector.
    bool use_tomography = true;
    /// 0 = exact expectation values.
    long shots_per_basis = 0;
    bool readout_error = false;
};

struct NoisyRunResult {
    /// Dominant eigenvector per time step (global phase unfixed).
    std::vector<WaveState> blocks;
    /// Dominant eigenvalue per time step (purity proxy).
    std::vector<double> eigenvalues;
    /// Post-selection probability per time step (ideally 1/N_t).
    std::vector<double> branch_probabilities;
};

/// Twirl-averaged noisy execution of the plan followed by per-step
/// post-selection, optional tomography, and eigenvector extraction.
NoisyRunResult run_noisy_spacetime(const SpacetimePlan& plan, const NoisyRunOptions& options);

/// Depolarizing rates from average gate fidelities:
/// F_avg = 1 - p (d-1)/d with d = 2 (single-qubit) or 4 (two-qubit).
double depolarizing_rate_1q(double avg_fidelity);
double depolarizing_rate_2q(double avg_fidelity);

}  // namespace qvm
