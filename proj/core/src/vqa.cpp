// Copyright (c) 2026, the qvm project developers.
// SPDX-License-Identifier: Apache-2.0

#include "qvm/vqa.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "qvm/spacetime.hpp"

namespace qvm {

namespace {
Eigen::MatrixXcd matrix_power_pow2(const Eigen::MatrixXcd& f, int k) {
    // F^(2^(k-1)) by repeated squaring.
    Eigen::MatrixXcd out = f;
    for (int i = 1; i < k; ++i) out = (out * out).eval();
    return out;
}
}  // namespace

std::vector<GateOp> Ansatz::gates(const Eigen::VectorXd& theta) const {
    if (theta.size() != n_params()) throw DimensionError("Ansatz: wrong parameter count");
    std::vector<GateOp> ops;
    Eigen::Index p = 0;
    for (int layer = 0; layer < depth; ++layer) {
        // Full-angle rotations exp(-i theta P): the overlap cost is linear in
        // the circuit unitary, so each parameter enters as cos/sin of theta
        // itself and the two-point pi/2 shift rule gives the exact derivative.
        for (int q = 0; q < n_qubits; ++q) {
            ops.push_back(GateOp::rotation(PauliAxis::Y, 2.0 * theta[p++], q));
        }
        for (int q = 0; q < n_qubits; ++q) {
            ops.push_back(GateOp::rotation(PauliAxis::Z, 2.0 * theta[p++], q));
        }
        if (n_qubits > 1) {
            for (int q = 0; q < n_qubits; ++q) {
                const int next = (q + 1) % n_qubits;
                if (q < next || n_qubits > 2) ops.push_back(GateOp::cz(q, next));
                if (n_qubits == 2) break;  // ring degenerates to one CZ
            }
        }
    }
    return ops;
}

Eigen::MatrixXcd Ansatz::matrix(const Eigen::VectorXd& theta) const {
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    Eigen::MatrixXcd f = Eigen::MatrixXcd::Identity(dim, dim);
    StateVector basis;
    basis.n_qubits = n_qubits;
    const auto ops = gates(theta);
    for (Eigen::Index col = 0; col < dim; ++col) {
        basis.amplitudes = Eigen::VectorXcd::Zero(dim);
        basis.amplitudes[col] = 1.0;
        StateVector s = basis;
        for (const auto& op : ops) s = apply(s, op);
        f.col(col) = s.amplitudes;
    }
    return f;
}

CostReport cost_direct(const Ansatz& ansatz, const Eigen::VectorXd& theta,
                       const std::pair<WaveState, WaveState>& pair, int k) {
    const Eigen::Index dim = Eigen::Index{1} << ansatz.n_qubits;
    if (pair.first.amplitudes.size() != dim || pair.second.amplitudes.size() != dim) {
        throw DimensionError("cost_direct: state dimension does not match ansatz");
    }
    const Eigen::MatrixXcd fk = matrix_power_pow2(ansatz.matrix(theta), k);
    const Eigen::VectorXcd pred = fk * pair.first.amplitudes;
    CostReport report;
    report.value = (pair.second.amplitudes - pred).squaredNorm();
    report.z_expectation = pair.second.amplitudes.dot(pred).real();
    return report;
}

CostReport cost_hadamard(const Ansatz& ansatz, const Eigen::VectorXd& theta,
                         const Eigen::MatrixXcd& prep_i, const Eigen::MatrixXcd& prep_ik,
                         int k) {
    const int n_p = ansatz.n_qubits;
    const Eigen::Index dim = Eigen::Index{1} << n_p;
    if (prep_i.rows() != dim || prep_ik.rows() != dim) {
        throw DimensionError("cost_hadamard: prep unitary dimension mismatch");
    }
    const int ancilla = n_p;
    std::vector<int> spatial(static_cast<std::size_t>(n_p));
    std::iota(spatial.begin(), spatial.end(), 0);

    StateVector s = StateVector::zero(n_p + 1);
    s = apply(s, GateOp::hadamard(ancilla));
    // Target frame on the |0> branch of the ancilla.
    s = apply(s, GateOp::pauli(PauliAxis::X, ancilla));
    s = apply(s, GateOp::dense(prep_ik, spatial).controlled_by({ancilla}));
    s = apply(s, GateOp::pauli(PauliAxis::X, ancilla));
    // Source frame plus the candidate evolution on the |1> branch.
    s = apply(s, GateOp::dense(prep_i, spatial).controlled_by({ancilla}));
    const Eigen::MatrixXcd fk = matrix_power_pow2(ansatz.matrix(theta), k);
    s = apply(s, GateOp::dense(fk, spatial).controlled_by({ancilla}));
    s = apply(s, GateOp::hadamard(ancilla));

    CostReport report;
    report.z_expectation = expectation_z(s, ancilla);
    report.value = 2.0 - 2.0 * report.z_expectation;
    return report;
}

Eigen::VectorXd gradient_parameter_shift(const Ansatz& ansatz, const Eigen::VectorXd& theta,
                                         const std::pair<WaveState, WaveState>& pair,
                                         int k, bool use_hadamard_circuit) {
    auto cost = [&](const Eigen::VectorXd& t) {
        if (use_hadamard_circuit) {
            const Eigen::MatrixXcd prep_i = completion_unitary(pair.first.amplitudes);
            const Eigen::MatrixXcd prep_ik = completion_unitary(pair.second.amplitudes);
            return cost_hadamard(ansatz, t, prep_i, prep_ik, k).value;
        }
        return cost_direct(ansatz, t, pair, k).value;
    };
    Eigen::VectorXd grad(theta.size());
    for (Eigen::Index l = 0; l < theta.size(); ++l) {
        Eigen::VectorXd tp = theta, tm = theta;
        tp[l] += std::numbers::pi / 2.0;
        tm[l] -= std::numbers::pi / 2.0;
        grad[l] = 0.5 * (cost(tp) - cost(tm));
    }
    return grad;
}

VqaResult train(const Ansatz& ansatz, const TrainingSet& training, const VqaOptions& options) {
    const int n = ansatz.n_params();
    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> dist(-0.1, 0.1);
    Eigen::VectorXd theta(n);
    for (int i = 0; i < n; ++i) theta[i] = dist(rng);

    auto total_cost = [&](const Eigen::VectorXd& t) {
        double c = 0.0;
        for (const auto& pair : training.pairs) c += cost_direct(ansatz, t, pair).value;
        return c;
    };

    VqaResult result;
    Eigen::VectorXd m_t = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd v_t = Eigen::VectorXd::Zero(n);
    const double beta1 = 0.9, beta2 = 0.999, eps = 1e-8;

    double loss = total_cost(theta);
    result.loss_history.push_back(loss);
    Eigen::VectorXd best_theta = theta;
    double best_loss = loss;

    for (int iter = 0; iter < options.max_iters && best_loss > options.tol; ++iter) {
        Eigen::VectorXd grad = Eigen::VectorXd::Zero(n);
        for (const auto& pair : training.pairs) {
            grad += gradient_parameter_shift(ansatz, theta, pair);
        }
        m_t = beta1 * m_t + (1.0 - beta1) * grad;
        v_t = beta2 * v_t + (1.0 - beta2) * grad.cwiseProduct(grad);
        const double bc1 = 1.0 - std::pow(beta1, iter + 1);
        const double bc2 = 1.0 - std::pow(beta2, iter + 1);
        theta -= options.learning_rate *
                 (m_t / bc1).cwiseQuotient(((v_t / bc2).cwiseSqrt().array() + eps).matrix());
        loss = total_cost(theta);
        result.loss_history.push_back(loss);
        if (loss < best_loss) {
            best_loss = loss;
            best_theta = theta;
        }
    }

    result.theta = best_theta;
    result.final_loss = best_loss;
    return result;
}

}  // namespace qvm
