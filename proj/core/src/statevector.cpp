// Copyright (c) 2026, the qvm project developers.
// SPDX-License-Identifier: Apache-2.0

#include "qvm/statevector.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace qvm {

namespace {
const Complex kI{0.0, 1.0};

Eigen::Matrix2cd pauli_matrix(PauliAxis axis) {
    Eigen::Matrix2cd m;
    switch (axis) {
        case PauliAxis::X: m << 0, 1, 1, 0; break;
        case PauliAxis::Y: m << 0, -kI, kI, 0; break;
        case PauliAxis::Z: m << 1, 0, 0, -1; break;
    }
    return m;
}
}  // namespace

StateVector StateVector::zero(int n_qubits) {
    StateVector s;
    s.n_qubits = n_qubits;
    s.amplitudes = Eigen::VectorXcd::Zero(Eigen::Index{1} << n_qubits);
    s.amplitudes[0] = 1.0;
    return s;
}

GateOp GateOp::hadamard(int q) {
    GateOp op;
    op.kind = Kind::Hadamard;
    op.targets = {q};
    return op;
}

GateOp GateOp::pauli(PauliAxis axis, int q) {
    GateOp op;
    op.kind = Kind::Pauli;
    op.axis = axis;
    op.targets = {q};
    return op;
}

GateOp GateOp::rotation(PauliAxis axis, double angle, int q) {
    GateOp op;
    op.kind = Kind::Rotation;
    op.axis = axis;
    op.angle = angle;
    op.targets = {q};
    return op;
}

GateOp GateOp::dense(Eigen::MatrixXcd u, std::vector<int> targets) {
    GateOp op;
    op.kind = Kind::DenseUnitary;
    op.matrix = std::move(u);
    op.targets = std::move(targets);
    return op;
}

GateOp GateOp::cz(int q0, int q1) {
    GateOp op;
    op.kind = Kind::Cz;
    op.targets = {q0, q1};
    return op;
}

GateOp GateOp::controlled_by(std::vector<int> controls) const {
    GateOp op = *this;
    op.controls.insert(op.controls.end(), controls.begin(), controls.end());
    return op;
}

Eigen::MatrixXcd GateOp::target_matrix() const {
    switch (kind) {
        case Kind::Hadamard: {
            Eigen::Matrix2cd h;
            h << 1, 1, 1, -1;
            return h / std::numbers::sqrt2;
        }
        case Kind::Pauli:
            return pauli_matrix(axis);
        case Kind::Rotation: {
            // exp(-i angle P/2) = cos(angle/2) I - i sin(angle/2) P
            const double c = std::cos(0.5 * angle);
            const double s = std::sin(0.5 * angle);
            return c * Eigen::Matrix2cd::Identity() - kI * s * pauli_matrix(axis);
        }
        case Kind::Cz: {
            Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
            m(3, 3) = -1.0;
            return m;
        }
        case Kind::DenseUnitary:
            return matrix;
    }
    throw Error("unreachable gate kind");
}

bool is_unitary(const Eigen::MatrixXcd& u, double tol) {
    if (u.rows() != u.cols()) return false;
    return (u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols()))
               .cwiseAbs()
               .maxCoeff() < tol;
}

StateVector apply(const StateVector& state, const GateOp& op) {
    const int n = state.n_qubits;
    for (int q : op.targets) {
        if (q < 0 || q >= n) throw IndexError("target qubit " + std::to_string(q) + " out of range");
    }
    for (int q : op.controls) {
        if (q < 0 || q >= n) throw IndexError("control qubit " + std::to_string(q) + " out of range");
        for (int t : op.targets) {
            if (t == q) throw IndexError("control and target qubits overlap");
        }
    }
    const Eigen::MatrixXcd u = op.target_matrix();
    const std::size_t m = op.targets.size();
    const Eigen::Index dim = Eigen::Index{1} << m;
    if (u.rows() != dim || u.cols() != dim) {
        throw DimensionError("gate matrix dimension does not match target count");
    }
    if (op.kind == GateOp::Kind::DenseUnitary && !is_unitary(u)) {
        throw NonUnitaryError("dense gate matrix is not unitary");
    }

    std::uint64_t target_mask = 0;
    for (int q : op.targets) target_mask |= std::uint64_t{1} << q;
    std::uint64_t control_mask = 0;
    for (int q : op.controls) control_mask |= std::uint64_t{1} << q;

    // Sub-block offset of each target-register basis index; targets[0] is the
    // least-significant bit of the sub-index.
    std::vector<std::uint64_t> offsets(static_cast<std::size_t>(dim));
    for (Eigen::Index j = 0; j < dim; ++j) {
        std::uint64_t off = 0;
        for (std::size_t b = 0; b < m; ++b) {
            if (j & (Eigen::Index{1} << b)) off |= std::uint64_t{1} << op.targets[b];
        }
        offsets[static_cast<std::size_t>(j)] = off;
    }

    StateVector out = state;
    const std::uint64_t total = std::uint64_t{1} << n;
    Eigen::VectorXcd sub(dim);
    for (std::uint64_t base = 0; base < total; ++base) {
        if (base & target_mask) continue;
        if ((base & control_mask) != control_mask) continue;
        for (Eigen::Index j = 0; j < dim; ++j) {
            sub[j] = state.amplitudes[static_cast<Eigen::Index>(base | offsets[static_cast<std::size_t>(j)])];
        }
        const Eigen::VectorXcd res = u * sub;
        for (Eigen::Index j = 0; j < dim; ++j) {
            out.amplitudes[static_cast<Eigen::Index>(base | offsets[static_cast<std::size_t>(j)])] = res[j];
        }
    }
    return out;
}

double expectation_z(const StateVector& state, int qubit) {
    if (qubit < 0 || qubit >= state.n_qubits) {
        throw IndexError("expectation_z: qubit out of range");
    }
    const std::uint64_t mask = std::uint64_t{1} << qubit;
    double z = 0.0;
    for (Eigen::Index i = 0; i < state.amplitudes.size(); ++i) {
        const double p = std::norm(state.amplitudes[i]);
        z += (static_cast<std::uint64_t>(i) & mask) ? -p : p;
    }
    return z;
}

}  // namespace qvm
