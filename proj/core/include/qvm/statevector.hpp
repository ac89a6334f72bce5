// Copyright (c) 2026, the qvm project developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "qvm/errors.hpp"
#include "qvm/vortex.hpp"

namespace qvm {

/// Dense statevector over n qubits. Qubit 0 is the least-significant bit of
/// the amplitude index; higher registers (e.g. temporal qubits) occupy the
/// high bits. This ordering is the single source of truth project-wide.
struct StateVector {
    Eigen::VectorXcd amplitudes;
    int n_qubits = 0;

    static StateVector zero(int n_qubits);
    double norm() const { return amplitudes.norm(); }
};

enum class PauliAxis : std::uint8_t { X, Y, Z };

/// One circuit element: a named single-qubit gate, a parameterized rotation,
/// a dense unitary on a qubit subset, or a controlled wrapper around any of
/// these. Controls act only where every control qubit is |1>.
struct GateOp {
    enum class Kind : std::uint8_t { Hadamard, Pauli, Rotation, DenseUnitary, Cz };

    Kind kind = Kind::Hadamard;
    std::vector<int> targets;
    std::vector<int> controls;
    PauliAxis axis = PauliAxis::X;  // Pauli / Rotation
    double angle = 0.0;             // Rotation: exp(-i angle P/2)
    Eigen::MatrixXcd matrix;        // DenseUnitary: dim 2^targets.size()

    static GateOp hadamard(int q);
    static GateOp pauli(PauliAxis axis, int q);
    static GateOp rotation(PauliAxis axis, double angle, int q);
    static GateOp dense(Eigen::MatrixXcd u, std::vector<int> targets);
    static GateOp cz(int q0, int q1);
    GateOp controlled_by(std::vector<int> controls) const;

    /// Dense matrix of the uncontrolled part, dim 2^targets.size().
    Eigen::MatrixXcd target_matrix() const;
};

/// Applies `op` to `state`. Dense matrices are checked for unitarity
/// (tolerance 1e-10); controlled ops act by block masking, never by
/// expanding the full controlled matrix.
StateVector apply(const StateVector& state, const GateOp& op);

/// <Z_qubit> of the state, in [-1, 1].
double expectation_z(const StateVector& state, int qubit);

/// True if u is unitary within `tol` in max-norm.
bool is_unitary(const Eigen::MatrixXcd& u, double tol = 1e-10);

}  // namespace qvm
