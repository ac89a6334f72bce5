// Copyright (c) 2026, the qvm project developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <utility>
#include <vector>

#include "qvm/vortex.hpp"

namespace qvm {

/// Normalized complex state vector encoding vortex positions.
struct WaveState {
    Eigen::VectorXcd amplitudes;

    double norm() const { return amplitudes.norm(); }
    Eigen::Index size() const { return amplitudes.size(); }
};

/// Everything needed to invert the position -> wave encoding:
/// the scale lambda, reference point c0, the running integral of c(t),
/// and the strengths entering c(t).
struct EncodingFrame {
    double lambda = 0.0;
    Complex c0{0.0, 0.0};
    Complex c_integral{0.0, 0.0};
    std::vector<double> strengths;
};

/// Guard on |sum_i conj(psi_i)| before dividing in c(t).
inline constexpr double kDenominatorGuard = 1e-10;

/// psi_j = lambda * (phi_j - c0) with lambda = 1/sqrt(sum |phi_j - c0|^2).
std::pair<WaveState, EncodingFrame> encode(const VortexSystem& system, Complex c0);

/// Drift of the collective reference point:
///   c = (i lambda / 4pi) sum_{j != k} Gamma_k
///         (psi_j conj(psi_k) - psi_k conj(psi_j)) / (|psi_j - psi_k|^2 sum_i conj(psi_i)).
Complex c_of_t(const WaveState& state, const EncodingFrame& frame,
               double min_separation = kMinSeparation);

/// RK4 integration of the intrinsic nonlinear psi dynamics. Returns n_steps+1
/// states (index 0 is the input). The raw integrated norm must stay within
/// 1e-6 of 1 or NormDriftError is thrown; states are not renormalized.
std::vector<WaveState> evolve_wavestate(const WaveState& state,
                                        const EncodingFrame& frame, double dt,
                                        std::size_t n_steps,
                                        double min_separation = kMinSeparation);

struct DecodeOptions {
    double sampling_proportion = 1.0;
    std::uint64_t seed = 0;
    /// When true, use per-frame trapezoidal integration of the c history
    /// instead of the averaged-constant approximation.
    bool exact_integration = false;
};

/// Trapezoidal accumulation of the c(t) history of `states` onto
/// frame.c_integral, for resuming the encoding after an evolution span.
EncodingFrame advance_frame(const EncodingFrame& frame,
                            const std::vector<WaveState>& states, double dt);

/// Invert the encoding over a uniformly spaced state history:
///   phi_j(t_i) = psi_j(t_i)/lambda + c_const * t_i + c0,
/// with c_const the mean of c(t) over a random frame subset of size
/// ceil(SP * n) (uniform, without replacement, seeded).
/// `t_offset` shifts the reconstructed time axis (t_i = t_offset + i*dt).
Trajectory decode(const std::vector<WaveState>& states, const EncodingFrame& frame,
                  double dt, const DecodeOptions& options, double t_offset = 0.0);

}  // namespace qvm
