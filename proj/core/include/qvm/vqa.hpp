// Copyright (c) 2026, the qvm project developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qvm/hamiltonian_fit.hpp"
#include "qvm/statevector.hpp"

namespace qvm {

/// Hardware-style ansatz for the one-step evolution F(theta): `depth` layers
/// of per-qubit RY and RZ rotations, each layer followed by a CZ ring when
/// more than one qubit is present. Every parameterized generator is a Pauli
/// over 2, so the parameter-shift rule is exact.
struct Ansatz {
    int n_qubits = 1;
    int depth = 1;

    int n_params() const { return 2 * n_qubits * depth; }

    /// Dense F(theta) on 2^n_qubits dimensions.
    Eigen::MatrixXcd matrix(const Eigen::VectorXd& theta) const;

    /// Gate sequence of F(theta) for circuit-level execution.
    std::vector<GateOp> gates(const Eigen::VectorXd& theta) const;
};

struct CostReport {
    double value = 0.0;
    double z_expectation = 0.0;
    std::optional<Eigen::VectorXd> gradient;
};

/// C = || psi_gt(i+K) - F(theta)^(2^(k-1)) psi_gt(i) ||^2 by direct linear
/// algebra; reports <Z> = Re <gt|pred> alongside (C = 2 - 2<Z> for
/// normalized states).
CostReport cost_direct(const Ansatz& ansatz, const Eigen::VectorXd& theta,
                       const std::pair<WaveState, WaveState>& pair, int k = 1);

/// Same cost evaluated through the ancilla Hadamard-test circuit: H on the
/// ancilla, anti-controlled prep of the target frame, controlled prep of the
/// source frame, controlled F_k(theta), H, then <Z> on the ancilla.
CostReport cost_hadamard(const Ansatz& ansatz, const Eigen::VectorXd& theta,
                         const Eigen::MatrixXcd& prep_i, const Eigen::MatrixXcd& prep_ik,
                         int k = 1);

/// Parameter-shift gradient: dC/dtheta_l = (C(theta_l + pi/2) - C(theta_l - pi/2)) / 2.
Eigen::VectorXd gradient_parameter_shift(const Ansatz& ansatz, const Eigen::VectorXd& theta,
                                         const std::pair<WaveState, WaveState>& pair,
                                         int k = 1, bool use_hadamard_circuit = false);

struct VqaOptions {
    int max_iters = 5000;
    double learning_rate = 0.05;
    double tol = 1e-10;
    std::uint64_t seed = 0;
};

struct VqaResult {
    Eigen::VectorXd theta;
    std::vector<double> loss_history;
    double final_loss = 0.0;
};

/// Adam over the summed single-step cost across all training pairs, with
/// parameter-shift gradients. Deterministic given the seed.
VqaResult train(const Ansatz& ansatz, const TrainingSet& training,
                const VqaOptions& options = {});

}  // namespace qvm
