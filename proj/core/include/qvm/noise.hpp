// Copyright (c) 2026, the qvm project developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <utility>
#include <vector>

#include "qvm/spacetime.hpp"
#include "qvm/statevector.hpp"

namespace qvm {

/// Density operator over n qubits, same bit ordering as StateVector.
/// Density-matrix simulation is capped at 10 qubits.
struct DensityMatrix {
    Eigen::MatrixXcd matrix;
    int n_qubits = 0;

    static DensityMatrix pure(const StateVector& state);
    static DensityMatrix from_wavestate(const WaveState& state);

    double purity() const { return (matrix * matrix).trace().real(); }

    /// Hermiticity within 1e-10, eigenvalues >= -1e-9, trace 1 within 1e-9.
    void validate() const;
};

inline constexpr int kMaxDensityQubits = 10;

/// Gate-level error model. Readout fidelities f0/f1 are per qubit; empty
/// vectors mean ideal readout. Decoherence (per-gate amplitude and phase
/// damping from T1/T2 and gate durations) is off unless t1_us is populated.
struct NoiseModel {
    double p1 = 0.0;
    double p2 = 0.0;
    std::vector<double> f0;
    std::vector<double> f1;
    std::vector<double> t1_us;
    std::vector<double> t2_us;
    double gate_ns_1q = 24.0;
    double gate_ns_2q = 40.0;
    /// Coherent controlled-phase over-rotation attached to every CZ (radians).
    double cz_phase_error = 0.0;

    bool has_readout_error() const { return !f0.empty(); }
    bool has_decoherence() const { return !t1_us.empty(); }
    void validate(int n_qubits) const;
};

/// Conjugate rho by the gate's unitary (no noise).
DensityMatrix apply_unitary(const DensityMatrix& rho, const GateOp& op);

/// P rho P^dagger for a Pauli string given as (axis, qubit) pairs; O(4^n).
DensityMatrix pauli_conjugate(const DensityMatrix& rho,
                              const std::vector<std::pair<PauliAxis, int>>& string);

/// rho -> (1-p) rho + p * I/2^m (x) Tr_support(rho).
DensityMatrix depolarize(const DensityMatrix& rho, const std::vector<int>& support, double p);

/// Unitary conjugation followed by depolarizing on the gate support (p1 for
/// one qubit, p2 otherwise), the configured CZ coherent error, and optional
/// per-qubit damping for the gate duration.
DensityMatrix apply_channel(const DensityMatrix& rho, const GateOp& op,
                            const NoiseModel& model);

/// Run a gate list from |0...0> under the model.
DensityMatrix run_noisy_circuit(const std::vector<GateOp>& circuit, int n_qubits,
                                const NoiseModel& model);

/// Dominant eigenpair; DegenerateSpectrumError when the top two eigenvalues
/// are within 1e-9. The eigenvector phase is left as returned by the solver.
std::pair<WaveState, double> top_eigenvector(const DensityMatrix& rho);

struct TomographyOptions {
    /// 0 means exact expectation values (infinite shots).
    long shots_per_basis = 0;
    std::uint64_t seed = 0;
    /// Optional readout confusion applied to measurement probabilities.
    const NoiseModel* readout = nullptr;
};

/// Linear-inversion state tomography from all 4^n Pauli expectations,
/// followed by projection to the nearest PSD trace-1 matrix.
DensityMatrix tomography(const DensityMatrix& rho, const TomographyOptions& options = {});

/// Project the temporal register (high bits) onto |index>, trace it out and
/// renormalize. Returns the spatial density matrix and the branch probability.
std::pair<DensityMatrix, double> postselect_temporal(const DensityMatrix& rho, int n_p,
                                                     int n_t, std::size_t temporal_index);
std::pair<DensityMatrix, double> postselect_temporal(const StateVector& state, int n_p,
                                                     int n_t, std::size_t temporal_index);

/// Randomized-compiling variants: every CZ is replaced by random Pauli pairs
/// before it plus the compensating Pauli pair after it, leaving the ideal
/// circuit unchanged up to global phase. Throws NoTwirlableGateError when the
/// circuit has no CZ.
std::vector<std::vector<GateOp>> pauli_twirl_variants(const std::vector<GateOp>& circuit,
                                                      int n_variants, std::uint64_t seed);

/// Trace out the qubits in `discard` (remaining qubits keep relative order).
Eigen::MatrixXcd partial_trace(const Eigen::MatrixXcd& rho, int n_qubits,
                               const std::vector<int>& discard);

}  // namespace qvm
