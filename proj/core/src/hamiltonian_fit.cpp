// Copyright (c) 2026, the qvm project developers.
// SPDX-License-Identifier: Apache-2.0

#include "qvm/hamiltonian_fit.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <random>
#include <string>

namespace qvm {

namespace {
const Complex kI{0.0, 1.0};

// theta layout: N diagonal reals, then (re, im) for each upper off-diagonal.
Eigen::MatrixXcd unpack(const Eigen::VectorXd& theta, Eigen::Index n) {
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
    Eigen::Index p = 0;
    for (Eigen::Index j = 0; j < n; ++j) h(j, j) = theta[p++];
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index k = j + 1; k < n; ++k) {
            const Complex v{theta[p], theta[p + 1]};
            p += 2;
            h(j, k) = v;
            h(k, j) = std::conj(v);
        }
    }
    return h;
}

Eigen::VectorXd pack(const Eigen::MatrixXcd& h) {
    const Eigen::Index n = h.rows();
    Eigen::VectorXd theta(n * n);
    Eigen::Index p = 0;
    for (Eigen::Index j = 0; j < n; ++j) theta[p++] = h(j, j).real();
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index k = j + 1; k < n; ++k) {
            theta[p++] = h(j, k).real();
            theta[p++] = h(j, k).imag();
        }
    }
    return theta;
}

// Stacked pair matrices: X holds inputs as columns, Y the targets.
void stack_pairs(const TrainingSet& training, Eigen::MatrixXcd& x, Eigen::MatrixXcd& y) {
    const Eigen::Index dim = training.state_dim();
    const Eigen::Index m = static_cast<Eigen::Index>(training.size());
    x.resize(dim, m);
    y.resize(dim, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        x.col(i) = training.pairs[static_cast<std::size_t>(i)].first.amplitudes;
        y.col(i) = training.pairs[static_cast<std::size_t>(i)].second.amplitudes;
    }
}

double loss_of(const Eigen::MatrixXcd& h, const Eigen::MatrixXcd& x,
               const Eigen::MatrixXcd& y, double dt) {
    return (y - evolution_operator(h, dt) * x).squaredNorm();
}
}  // namespace

Eigen::Index TrainingSet::state_dim() const {
    if (pairs.empty()) throw InsufficientDataError("TrainingSet is empty");
    return pairs.front().first.amplitudes.size();
}

TrainingSet build_training_set(const std::vector<WaveState>& states, std::size_t stride,
                               const std::vector<std::size_t>& indices) {
    if (stride == 0) throw ConfigError("build_training_set: stride must be positive");
    if (states.size() <= stride) {
        throw InsufficientDataError("build_training_set: trajectory shorter than stride");
    }
    TrainingSet set;
    if (indices.empty()) {
        for (std::size_t i = 0; i + stride < states.size(); ++i) {
            set.pairs.emplace_back(states[i], states[i + stride]);
        }
    } else {
        for (std::size_t i : indices) {
            if (i + stride >= states.size()) {
                throw IndexError("build_training_set: index " + std::to_string(i) +
                                 " + stride out of range");
            }
            set.pairs.emplace_back(states[i], states[i + stride]);
        }
    }
    const auto dim = static_cast<std::size_t>(set.state_dim());
    if (set.size() < dim * dim) {
        throw InsufficientDataError("build_training_set: need at least N_p^2 = " +
                                    std::to_string(dim * dim) + " pairs, got " +
                                    std::to_string(set.size()));
    }
    return set;
}

double fit_loss(const Eigen::MatrixXcd& hamiltonian, const TrainingSet& training,
                double dt_train) {
    Eigen::MatrixXcd x, y;
    stack_pairs(training, x, y);
    return loss_of(hamiltonian, x, y, dt_train);
}

Eigen::MatrixXcd evolution_operator(const Eigen::MatrixXcd& hamiltonian, double t) {
    const Eigen::MatrixXcd a = -kI * t * hamiltonian;
    return a.exp();
}

EffectiveHamiltonian fit(const TrainingSet& training, double dt_train,
                         const FitOptions& options) {
    if (dt_train <= 0.0) throw ConfigError("fit: dt_train must be positive");
    const Eigen::Index dim = training.state_dim();
    Eigen::MatrixXcd x, y;
    stack_pairs(training, x, y);

    Eigen::VectorXd theta;
    if (options.warm_start) {
        // Best unitary in Frobenius norm is the polar factor of Y X^dagger;
        // a Hermitian log turns it back into a generator.
        const Eigen::MatrixXcd m = y * x.adjoint();
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
        const Eigen::MatrixXcd u = svd.matrixU() * svd.matrixV().adjoint();
        const Eigen::MatrixXcd log_u = u.log();
        Eigen::MatrixXcd h0 = kI / dt_train * log_u;
        h0 = 0.5 * (h0 + h0.adjoint()).eval();
        theta = pack(h0);
    } else {
        std::mt19937_64 rng(options.seed);
        std::uniform_real_distribution<double> dist(-0.1, 0.1);
        theta.resize(dim * dim);
        for (Eigen::Index i = 0; i < theta.size(); ++i) theta[i] = dist(rng);
    }

    auto loss_at = [&](const Eigen::VectorXd& t) {
        return loss_of(unpack(t, dim), x, y, dt_train);
    };

    // Adam with central-difference gradients.
    Eigen::VectorXd m_t = Eigen::VectorXd::Zero(theta.size());
    Eigen::VectorXd v_t = Eigen::VectorXd::Zero(theta.size());
    const double beta1 = 0.9, beta2 = 0.999, eps = 1e-8;

    double best_loss = loss_at(theta);
    Eigen::VectorXd best_theta = theta;
    int iter = 0;
    int stall = 0;
    for (; iter < options.max_iters && best_loss > options.tol && stall < 100; ++iter) {
        Eigen::VectorXd grad(theta.size());
        for (Eigen::Index p = 0; p < theta.size(); ++p) {
            Eigen::VectorXd tp = theta, tm = theta;
            tp[p] += options.fd_step;
            tm[p] -= options.fd_step;
            grad[p] = (loss_at(tp) - loss_at(tm)) / (2.0 * options.fd_step);
        }
        m_t = beta1 * m_t + (1.0 - beta1) * grad;
        v_t = beta2 * v_t + (1.0 - beta2) * grad.cwiseProduct(grad);
        const double bc1 = 1.0 - std::pow(beta1, iter + 1);
        const double bc2 = 1.0 - std::pow(beta2, iter + 1);
        theta -= options.learning_rate *
                 (m_t / bc1).cwiseQuotient(((v_t / bc2).cwiseSqrt().array() + eps).matrix());
        const double loss = loss_at(theta);
        if (loss < best_loss * (1.0 - 1e-12)) {
            best_loss = loss;
            best_theta = theta;
            stall = 0;
        } else {
            ++stall;
        }
    }

    if (options.require_convergence && best_loss > options.tol) {
        throw NonConvergenceError("fit: loss " + std::to_string(best_loss) +
                                  " above tol after " + std::to_string(iter) + " iters");
    }

    EffectiveHamiltonian result;
    result.matrix = unpack(best_theta, dim);
    result.dt_train = dt_train;
    result.dt_predict = dt_train;
    result.loss = best_loss;
    result.iterations = iter;
    return result;
}

Eigen::MatrixXcd propagator(const EffectiveHamiltonian& h, std::size_t n_steps) {
    if (n_steps < 1) throw ConfigError("propagator: n_steps must be >= 1");
    return evolution_operator(h.matrix, static_cast<double>(n_steps) * h.dt_predict);
}

}  // namespace qvm
