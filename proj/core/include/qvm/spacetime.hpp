// Copyright (c) 2026, the qvm project developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "qvm/encoding.hpp"
#include "qvm/statevector.hpp"

namespace qvm {

/// Everything needed to run the spatiotemporal evolution circuit:
/// the state-prep unitary (first column = initial state), the one-step
/// evolution F, and the ladder F_k = F^(2^(k-1)).
struct SpacetimePlan {
    int n_p = 0;
    int n_t = 0;
    Eigen::MatrixXcd prep_unitary;
    Eigen::MatrixXcd step_unitary;
    std::vector<Eigen::MatrixXcd> f_ladder;  // f_ladder[k-1] = F^(2^(k-1))

    std::size_t n_time_steps() const { return std::size_t{1} << n_t; }
};

/// Full register state: temporal qubits in the high bits, spatial in the low
/// bits, so temporal basis index i addresses the block holding psi^i.
struct SpacetimeState {
    StateVector state;
    int n_p = 0;
    int n_t = 0;
    /// Controlled-unitary applications issued by run(); exactly n_t.
    int controlled_ops = 0;
};

/// Pad amplitudes with zeros up to dimension 2^ceil(log2(len)).
Eigen::VectorXcd pad_to_power_of_two(const Eigen::VectorXcd& amplitudes);

/// Embed a unitary block-diagonally with identity on the padded subspace.
Eigen::MatrixXcd embed_unitary(const Eigen::MatrixXcd& u, Eigen::Index dim);

/// Unitary whose first column is `column` (Householder-style completion).
Eigen::MatrixXcd completion_unitary(const Eigen::VectorXcd& column);

/// Assemble the plan: prep from the (padded) initial state, F_k by repeated
/// squaring of F. F must be unitary of power-of-two dimension >= the state.
SpacetimePlan build_plan(int n_t, const WaveState& initial, const Eigen::MatrixXcd& f);

/// Execute prep + Hadamards + the controlled-F_k ladder. Final state is
/// (1/sqrt(N_t)) sum_i |i>_t (x) F^i |psi0>, with n_t controlled applications.
SpacetimeState run(const SpacetimePlan& plan);

/// Renormalized i-th temporal block and its raw weight (must be 1/N_t
/// within 1e-6, else BlockWeightError).
std::pair<WaveState, double> extract_block(const SpacetimeState& state, std::size_t i);

}  // namespace qvm
