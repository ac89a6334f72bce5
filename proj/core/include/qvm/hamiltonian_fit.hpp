// Copyright (c) 2026, the qvm project developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <utility>
#include <vector>

#include "qvm/encoding.hpp"
#include "qvm/errors.hpp"

namespace qvm {

/// Hermitian generator of the linear surrogate dynamics, together with the
/// step sizes it was trained for and will be applied at.
struct EffectiveHamiltonian {
    Eigen::MatrixXcd matrix;
    double dt_train = 1.0;
    double dt_predict = 1.0;
    double loss = 0.0;
    int iterations = 0;
};

/// State pairs (psi(t_i), psi(t_i + dt_train)).
struct TrainingSet {
    std::vector<std::pair<WaveState, WaveState>> pairs;

    std::size_t size() const { return pairs.size(); }
    Eigen::Index state_dim() const;
};

/// Pairs (states[i], states[i+stride]) for every i in `indices` (all valid
/// start indices when `indices` is empty). Enforces the N_train >= N_p^2
/// identifiability bound.
TrainingSet build_training_set(const std::vector<WaveState>& states, std::size_t stride,
                               const std::vector<std::size_t>& indices = {});

struct FitOptions {
    int max_iters = 5000;
    double tol = 1e-12;
    double learning_rate = 0.05;
    /// Initialize from the closed-form unitary fit (orthogonal Procrustes on
    /// the pair matrices) followed by a Hermitian matrix logarithm.
    bool warm_start = true;
    bool require_convergence = false;
    std::uint64_t seed = 0;
    double fd_step = 1e-6;
};

/// Total squared residual sum_i || y_i - exp(-iH dt) x_i ||^2.
double fit_loss(const Eigen::MatrixXcd& hamiltonian, const TrainingSet& training,
                double dt_train);

/// Fit H by minimizing the squared propagation residual over the N_p^2 real
/// degrees of freedom, Adam with central-difference gradients on top of the
/// Procrustes warm start.
EffectiveHamiltonian fit(const TrainingSet& training, double dt_train,
                         const FitOptions& options = {});

/// exp(-i H n_steps dt_predict); unitary by construction.
Eigen::MatrixXcd propagator(const EffectiveHamiltonian& h, std::size_t n_steps);

/// Hermitian matrix exponential helper: exp(-i H t).
Eigen::MatrixXcd evolution_operator(const Eigen::MatrixXcd& hamiltonian, double t);

}  // namespace qvm
